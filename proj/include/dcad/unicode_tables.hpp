// Generated by scripts/gen_unicode_tables.py (Unicode 13.0.0). Do not edit.
#pragma once

#include <cstddef>
#include <cstdint>

namespace dcad::detail {

enum class CharClass : std::uint8_t {
  Other = 0, Letter, Mark, Number, Punct, Symbol, Separator
};

struct ClassRange {
  char32_t lo;
  char32_t hi;
  CharClass cls;
};

inline constexpr std::size_t kClassRangeCount = 1467;
inline constexpr ClassRange kClassRanges[kClassRangeCount] = {
    {0x20, 0x20, CharClass::Separator}, {0x21, 0x23, CharClass::Punct}, {0x24, 0x24, CharClass::Symbol}, {0x25, 0x2A, CharClass::Punct},
    {0x2B, 0x2B, CharClass::Symbol}, {0x2C, 0x2F, CharClass::Punct}, {0x30, 0x39, CharClass::Number}, {0x3A, 0x3B, CharClass::Punct},
    {0x3C, 0x3E, CharClass::Symbol}, {0x3F, 0x40, CharClass::Punct}, {0x41, 0x5A, CharClass::Letter}, {0x5B, 0x5D, CharClass::Punct},
    {0x5E, 0x5E, CharClass::Symbol}, {0x5F, 0x5F, CharClass::Punct}, {0x60, 0x60, CharClass::Symbol}, {0x61, 0x7A, CharClass::Letter},
    {0x7B, 0x7B, CharClass::Punct}, {0x7C, 0x7C, CharClass::Symbol}, {0x7D, 0x7D, CharClass::Punct}, {0x7E, 0x7E, CharClass::Symbol},
    {0xA0, 0xA0, CharClass::Separator}, {0xA1, 0xA1, CharClass::Punct}, {0xA2, 0xA6, CharClass::Symbol}, {0xA7, 0xA7, CharClass::Punct},
    {0xA8, 0xA9, CharClass::Symbol}, {0xAA, 0xAA, CharClass::Letter}, {0xAB, 0xAB, CharClass::Punct}, {0xAC, 0xAC, CharClass::Symbol},
    {0xAE, 0xB1, CharClass::Symbol}, {0xB2, 0xB3, CharClass::Number}, {0xB4, 0xB4, CharClass::Symbol}, {0xB5, 0xB5, CharClass::Letter},
    {0xB6, 0xB7, CharClass::Punct}, {0xB8, 0xB8, CharClass::Symbol}, {0xB9, 0xB9, CharClass::Number}, {0xBA, 0xBA, CharClass::Letter},
    {0xBB, 0xBB, CharClass::Punct}, {0xBC, 0xBE, CharClass::Number}, {0xBF, 0xBF, CharClass::Punct}, {0xC0, 0xD6, CharClass::Letter},
    {0xD7, 0xD7, CharClass::Symbol}, {0xD8, 0xF6, CharClass::Letter}, {0xF7, 0xF7, CharClass::Symbol}, {0xF8, 0x2C1, CharClass::Letter},
    {0x2C2, 0x2C5, CharClass::Symbol}, {0x2C6, 0x2D1, CharClass::Letter}, {0x2D2, 0x2DF, CharClass::Symbol}, {0x2E0, 0x2E4, CharClass::Letter},
    {0x2E5, 0x2EB, CharClass::Symbol}, {0x2EC, 0x2EC, CharClass::Letter}, {0x2ED, 0x2ED, CharClass::Symbol}, {0x2EE, 0x2EE, CharClass::Letter},
    {0x2EF, 0x2FF, CharClass::Symbol}, {0x300, 0x36F, CharClass::Mark}, {0x370, 0x374, CharClass::Letter}, {0x375, 0x375, CharClass::Symbol},
    {0x376, 0x377, CharClass::Letter}, {0x37A, 0x37D, CharClass::Letter}, {0x37E, 0x37E, CharClass::Punct}, {0x37F, 0x37F, CharClass::Letter},
    {0x384, 0x385, CharClass::Symbol}, {0x386, 0x386, CharClass::Letter}, {0x387, 0x387, CharClass::Punct}, {0x388, 0x38A, CharClass::Letter},
    {0x38C, 0x38C, CharClass::Letter}, {0x38E, 0x3A1, CharClass::Letter}, {0x3A3, 0x3F5, CharClass::Letter}, {0x3F6, 0x3F6, CharClass::Symbol},
    {0x3F7, 0x481, CharClass::Letter}, {0x482, 0x482, CharClass::Symbol}, {0x483, 0x489, CharClass::Mark}, {0x48A, 0x52F, CharClass::Letter},
    {0x531, 0x556, CharClass::Letter}, {0x559, 0x559, CharClass::Letter}, {0x55A, 0x55F, CharClass::Punct}, {0x560, 0x588, CharClass::Letter},
    {0x589, 0x58A, CharClass::Punct}, {0x58D, 0x58F, CharClass::Symbol}, {0x591, 0x5BD, CharClass::Mark}, {0x5BE, 0x5BE, CharClass::Punct},
    {0x5BF, 0x5BF, CharClass::Mark}, {0x5C0, 0x5C0, CharClass::Punct}, {0x5C1, 0x5C2, CharClass::Mark}, {0x5C3, 0x5C3, CharClass::Punct},
    {0x5C4, 0x5C5, CharClass::Mark}, {0x5C6, 0x5C6, CharClass::Punct}, {0x5C7, 0x5C7, CharClass::Mark}, {0x5D0, 0x5EA, CharClass::Letter},
    {0x5EF, 0x5F2, CharClass::Letter}, {0x5F3, 0x5F4, CharClass::Punct}, {0x606, 0x608, CharClass::Symbol}, {0x609, 0x60A, CharClass::Punct},
    {0x60B, 0x60B, CharClass::Symbol}, {0x60C, 0x60D, CharClass::Punct}, {0x60E, 0x60F, CharClass::Symbol}, {0x610, 0x61A, CharClass::Mark},
    {0x61B, 0x61B, CharClass::Punct}, {0x61E, 0x61F, CharClass::Punct}, {0x620, 0x64A, CharClass::Letter}, {0x64B, 0x65F, CharClass::Mark},
    {0x660, 0x669, CharClass::Number}, {0x66A, 0x66D, CharClass::Punct}, {0x66E, 0x66F, CharClass::Letter}, {0x670, 0x670, CharClass::Mark},
    {0x671, 0x6D3, CharClass::Letter}, {0x6D4, 0x6D4, CharClass::Punct}, {0x6D5, 0x6D5, CharClass::Letter}, {0x6D6, 0x6DC, CharClass::Mark},
    {0x6DE, 0x6DE, CharClass::Symbol}, {0x6DF, 0x6E4, CharClass::Mark}, {0x6E5, 0x6E6, CharClass::Letter}, {0x6E7, 0x6E8, CharClass::Mark},
    {0x6E9, 0x6E9, CharClass::Symbol}, {0x6EA, 0x6ED, CharClass::Mark}, {0x6EE, 0x6EF, CharClass::Letter}, {0x6F0, 0x6F9, CharClass::Number},
    {0x6FA, 0x6FC, CharClass::Letter}, {0x6FD, 0x6FE, CharClass::Symbol}, {0x6FF, 0x6FF, CharClass::Letter}, {0x700, 0x70D, CharClass::Punct},
    {0x710, 0x710, CharClass::Letter}, {0x711, 0x711, CharClass::Mark}, {0x712, 0x72F, CharClass::Letter}, {0x730, 0x74A, CharClass::Mark},
    {0x74D, 0x7A5, CharClass::Letter}, {0x7A6, 0x7B0, CharClass::Mark}, {0x7B1, 0x7B1, CharClass::Letter}, {0x7C0, 0x7C9, CharClass::Number},
    {0x7CA, 0x7EA, CharClass::Letter}, {0x7EB, 0x7F3, CharClass::Mark}, {0x7F4, 0x7F5, CharClass::Letter}, {0x7F6, 0x7F6, CharClass::Symbol},
    {0x7F7, 0x7F9, CharClass::Punct}, {0x7FA, 0x7FA, CharClass::Letter}, {0x7FD, 0x7FD, CharClass::Mark}, {0x7FE, 0x7FF, CharClass::Symbol},
    {0x800, 0x815, CharClass::Letter}, {0x816, 0x819, CharClass::Mark}, {0x81A, 0x81A, CharClass::Letter}, {0x81B, 0x823, CharClass::Mark},
    {0x824, 0x824, CharClass::Letter}, {0x825, 0x827, CharClass::Mark}, {0x828, 0x828, CharClass::Letter}, {0x829, 0x82D, CharClass::Mark},
    {0x830, 0x83E, CharClass::Punct}, {0x840, 0x858, CharClass::Letter}, {0x859, 0x85B, CharClass::Mark}, {0x85E, 0x85E, CharClass::Punct},
    {0x860, 0x86A, CharClass::Letter}, {0x8A0, 0x8B4, CharClass::Letter}, {0x8B6, 0x8C7, CharClass::Letter}, {0x8D3, 0x8E1, CharClass::Mark},
    {0x8E3, 0x903, CharClass::Mark}, {0x904, 0x939, CharClass::Letter}, {0x93A, 0x93C, CharClass::Mark}, {0x93D, 0x93D, CharClass::Letter},
    {0x93E, 0x94F, CharClass::Mark}, {0x950, 0x950, CharClass::Letter}, {0x951, 0x957, CharClass::Mark}, {0x958, 0x961, CharClass::Letter},
    {0x962, 0x963, CharClass::Mark}, {0x964, 0x965, CharClass::Punct}, {0x966, 0x96F, CharClass::Number}, {0x970, 0x970, CharClass::Punct},
    {0x971, 0x980, CharClass::Letter}, {0x981, 0x983, CharClass::Mark}, {0x985, 0x98C, CharClass::Letter}, {0x98F, 0x990, CharClass::Letter},
    {0x993, 0x9A8, CharClass::Letter}, {0x9AA, 0x9B0, CharClass::Letter}, {0x9B2, 0x9B2, CharClass::Letter}, {0x9B6, 0x9B9, CharClass::Letter},
    {0x9BC, 0x9BC, CharClass::Mark}, {0x9BD, 0x9BD, CharClass::Letter}, {0x9BE, 0x9C4, CharClass::Mark}, {0x9C7, 0x9C8, CharClass::Mark},
    {0x9CB, 0x9CD, CharClass::Mark}, {0x9CE, 0x9CE, CharClass::Letter}, {0x9D7, 0x9D7, CharClass::Mark}, {0x9DC, 0x9DD, CharClass::Letter},
    {0x9DF, 0x9E1, CharClass::Letter}, {0x9E2, 0x9E3, CharClass::Mark}, {0x9E6, 0x9EF, CharClass::Number}, {0x9F0, 0x9F1, CharClass::Letter},
    {0x9F2, 0x9F3, CharClass::Symbol}, {0x9F4, 0x9F9, CharClass::Number}, {0x9FA, 0x9FB, CharClass::Symbol}, {0x9FC, 0x9FC, CharClass::Letter},
    {0x9FD, 0x9FD, CharClass::Punct}, {0x9FE, 0x9FE, CharClass::Mark}, {0xA01, 0xA03, CharClass::Mark}, {0xA05, 0xA0A, CharClass::Letter},
    {0xA0F, 0xA10, CharClass::Letter}, {0xA13, 0xA28, CharClass::Letter}, {0xA2A, 0xA30, CharClass::Letter}, {0xA32, 0xA33, CharClass::Letter},
    {0xA35, 0xA36, CharClass::Letter}, {0xA38, 0xA39, CharClass::Letter}, {0xA3C, 0xA3C, CharClass::Mark}, {0xA3E, 0xA42, CharClass::Mark},
    {0xA47, 0xA48, CharClass::Mark}, {0xA4B, 0xA4D, CharClass::Mark}, {0xA51, 0xA51, CharClass::Mark}, {0xA59, 0xA5C, CharClass::Letter},
    {0xA5E, 0xA5E, CharClass::Letter}, {0xA66, 0xA6F, CharClass::Number}, {0xA70, 0xA71, CharClass::Mark}, {0xA72, 0xA74, CharClass::Letter},
    {0xA75, 0xA75, CharClass::Mark}, {0xA76, 0xA76, CharClass::Punct}, {0xA81, 0xA83, CharClass::Mark}, {0xA85, 0xA8D, CharClass::Letter},
    {0xA8F, 0xA91, CharClass::Letter}, {0xA93, 0xAA8, CharClass::Letter}, {0xAAA, 0xAB0, CharClass::Letter}, {0xAB2, 0xAB3, CharClass::Letter},
    {0xAB5, 0xAB9, CharClass::Letter}, {0xABC, 0xABC, CharClass::Mark}, {0xABD, 0xABD, CharClass::Letter}, {0xABE, 0xAC5, CharClass::Mark},
    {0xAC7, 0xAC9, CharClass::Mark}, {0xACB, 0xACD, CharClass::Mark}, {0xAD0, 0xAD0, CharClass::Letter}, {0xAE0, 0xAE1, CharClass::Letter},
    {0xAE2, 0xAE3, CharClass::Mark}, {0xAE6, 0xAEF, CharClass::Number}, {0xAF0, 0xAF0, CharClass::Punct}, {0xAF1, 0xAF1, CharClass::Symbol},
    {0xAF9, 0xAF9, CharClass::Letter}, {0xAFA, 0xAFF, CharClass::Mark}, {0xB01, 0xB03, CharClass::Mark}, {0xB05, 0xB0C, CharClass::Letter},
    {0xB0F, 0xB10, CharClass::Letter}, {0xB13, 0xB28, CharClass::Letter}, {0xB2A, 0xB30, CharClass::Letter}, {0xB32, 0xB33, CharClass::Letter},
    {0xB35, 0xB39, CharClass::Letter}, {0xB3C, 0xB3C, CharClass::Mark}, {0xB3D, 0xB3D, CharClass::Letter}, {0xB3E, 0xB44, CharClass::Mark},
    {0xB47, 0xB48, CharClass::Mark}, {0xB4B, 0xB4D, CharClass::Mark}, {0xB55, 0xB57, CharClass::Mark}, {0xB5C, 0xB5D, CharClass::Letter},
    {0xB5F, 0xB61, CharClass::Letter}, {0xB62, 0xB63, CharClass::Mark}, {0xB66, 0xB6F, CharClass::Number}, {0xB70, 0xB70, CharClass::Symbol},
    {0xB71, 0xB71, CharClass::Letter}, {0xB72, 0xB77, CharClass::Number}, {0xB82, 0xB82, CharClass::Mark}, {0xB83, 0xB83, CharClass::Letter},
    {0xB85, 0xB8A, CharClass::Letter}, {0xB8E, 0xB90, CharClass::Letter}, {0xB92, 0xB95, CharClass::Letter}, {0xB99, 0xB9A, CharClass::Letter},
    {0xB9C, 0xB9C, CharClass::Letter}, {0xB9E, 0xB9F, CharClass::Letter}, {0xBA3, 0xBA4, CharClass::Letter}, {0xBA8, 0xBAA, CharClass::Letter},
    {0xBAE, 0xBB9, CharClass::Letter}, {0xBBE, 0xBC2, CharClass::Mark}, {0xBC6, 0xBC8, CharClass::Mark}, {0xBCA, 0xBCD, CharClass::Mark},
    {0xBD0, 0xBD0, CharClass::Letter}, {0xBD7, 0xBD7, CharClass::Mark}, {0xBE6, 0xBF2, CharClass::Number}, {0xBF3, 0xBFA, CharClass::Symbol},
    {0xC00, 0xC04, CharClass::Mark}, {0xC05, 0xC0C, CharClass::Letter}, {0xC0E, 0xC10, CharClass::Letter}, {0xC12, 0xC28, CharClass::Letter},
    {0xC2A, 0xC39, CharClass::Letter}, {0xC3D, 0xC3D, CharClass::Letter}, {0xC3E, 0xC44, CharClass::Mark}, {0xC46, 0xC48, CharClass::Mark},
    {0xC4A, 0xC4D, CharClass::Mark}, {0xC55, 0xC56, CharClass::Mark}, {0xC58, 0xC5A, CharClass::Letter}, {0xC60, 0xC61, CharClass::Letter},
    {0xC62, 0xC63, CharClass::Mark}, {0xC66, 0xC6F, CharClass::Number}, {0xC77, 0xC77, CharClass::Punct}, {0xC78, 0xC7E, CharClass::Number},
    {0xC7F, 0xC7F, CharClass::Symbol}, {0xC80, 0xC80, CharClass::Letter}, {0xC81, 0xC83, CharClass::Mark}, {0xC84, 0xC84, CharClass::Punct},
    {0xC85, 0xC8C, CharClass::Letter}, {0xC8E, 0xC90, CharClass::Letter}, {0xC92, 0xCA8, CharClass::Letter}, {0xCAA, 0xCB3, CharClass::Letter},
    {0xCB5, 0xCB9, CharClass::Letter}, {0xCBC, 0xCBC, CharClass::Mark}, {0xCBD, 0xCBD, CharClass::Letter}, {0xCBE, 0xCC4, CharClass::Mark},
    {0xCC6, 0xCC8, CharClass::Mark}, {0xCCA, 0xCCD, CharClass::Mark}, {0xCD5, 0xCD6, CharClass::Mark}, {0xCDE, 0xCDE, CharClass::Letter},
    {0xCE0, 0xCE1, CharClass::Letter}, {0xCE2, 0xCE3, CharClass::Mark}, {0xCE6, 0xCEF, CharClass::Number}, {0xCF1, 0xCF2, CharClass::Letter},
    {0xD00, 0xD03, CharClass::Mark}, {0xD04, 0xD0C, CharClass::Letter}, {0xD0E, 0xD10, CharClass::Letter}, {0xD12, 0xD3A, CharClass::Letter},
    {0xD3B, 0xD3C, CharClass::Mark}, {0xD3D, 0xD3D, CharClass::Letter}, {0xD3E, 0xD44, CharClass::Mark}, {0xD46, 0xD48, CharClass::Mark},
    {0xD4A, 0xD4D, CharClass::Mark}, {0xD4E, 0xD4E, CharClass::Letter}, {0xD4F, 0xD4F, CharClass::Symbol}, {0xD54, 0xD56, CharClass::Letter},
    {0xD57, 0xD57, CharClass::Mark}, {0xD58, 0xD5E, CharClass::Number}, {0xD5F, 0xD61, CharClass::Letter}, {0xD62, 0xD63, CharClass::Mark},
    {0xD66, 0xD78, CharClass::Number}, {0xD79, 0xD79, CharClass::Symbol}, {0xD7A, 0xD7F, CharClass::Letter}, {0xD81, 0xD83, CharClass::Mark},
    {0xD85, 0xD96, CharClass::Letter}, {0xD9A, 0xDB1, CharClass::Letter}, {0xDB3, 0xDBB, CharClass::Letter}, {0xDBD, 0xDBD, CharClass::Letter},
    {0xDC0, 0xDC6, CharClass::Letter}, {0xDCA, 0xDCA, CharClass::Mark}, {0xDCF, 0xDD4, CharClass::Mark}, {0xDD6, 0xDD6, CharClass::Mark},
    {0xDD8, 0xDDF, CharClass::Mark}, {0xDE6, 0xDEF, CharClass::Number}, {0xDF2, 0xDF3, CharClass::Mark}, {0xDF4, 0xDF4, CharClass::Punct},
    {0xE01, 0xE30, CharClass::Letter}, {0xE31, 0xE31, CharClass::Mark}, {0xE32, 0xE33, CharClass::Letter}, {0xE34, 0xE3A, CharClass::Mark},
    {0xE3F, 0xE3F, CharClass::Symbol}, {0xE40, 0xE46, CharClass::Letter}, {0xE47, 0xE4E, CharClass::Mark}, {0xE4F, 0xE4F, CharClass::Punct},
    {0xE50, 0xE59, CharClass::Number}, {0xE5A, 0xE5B, CharClass::Punct}, {0xE81, 0xE82, CharClass::Letter}, {0xE84, 0xE84, CharClass::Letter},
    {0xE86, 0xE8A, CharClass::Letter}, {0xE8C, 0xEA3, CharClass::Letter}, {0xEA5, 0xEA5, CharClass::Letter}, {0xEA7, 0xEB0, CharClass::Letter},
    {0xEB1, 0xEB1, CharClass::Mark}, {0xEB2, 0xEB3, CharClass::Letter}, {0xEB4, 0xEBC, CharClass::Mark}, {0xEBD, 0xEBD, CharClass::Letter},
    {0xEC0, 0xEC4, CharClass::Letter}, {0xEC6, 0xEC6, CharClass::Letter}, {0xEC8, 0xECD, CharClass::Mark}, {0xED0, 0xED9, CharClass::Number},
    {0xEDC, 0xEDF, CharClass::Letter}, {0xF00, 0xF00, CharClass::Letter}, {0xF01, 0xF03, CharClass::Symbol}, {0xF04, 0xF12, CharClass::Punct},
    {0xF13, 0xF13, CharClass::Symbol}, {0xF14, 0xF14, CharClass::Punct}, {0xF15, 0xF17, CharClass::Symbol}, {0xF18, 0xF19, CharClass::Mark},
    {0xF1A, 0xF1F, CharClass::Symbol}, {0xF20, 0xF33, CharClass::Number}, {0xF34, 0xF34, CharClass::Symbol}, {0xF35, 0xF35, CharClass::Mark},
    {0xF36, 0xF36, CharClass::Symbol}, {0xF37, 0xF37, CharClass::Mark}, {0xF38, 0xF38, CharClass::Symbol}, {0xF39, 0xF39, CharClass::Mark},
    {0xF3A, 0xF3D, CharClass::Punct}, {0xF3E, 0xF3F, CharClass::Mark}, {0xF40, 0xF47, CharClass::Letter}, {0xF49, 0xF6C, CharClass::Letter},
    {0xF71, 0xF84, CharClass::Mark}, {0xF85, 0xF85, CharClass::Punct}, {0xF86, 0xF87, CharClass::Mark}, {0xF88, 0xF8C, CharClass::Letter},
    {0xF8D, 0xF97, CharClass::Mark}, {0xF99, 0xFBC, CharClass::Mark}, {0xFBE, 0xFC5, CharClass::Symbol}, {0xFC6, 0xFC6, CharClass::Mark},
    {0xFC7, 0xFCC, CharClass::Symbol}, {0xFCE, 0xFCF, CharClass::Symbol}, {0xFD0, 0xFD4, CharClass::Punct}, {0xFD5, 0xFD8, CharClass::Symbol},
    {0xFD9, 0xFDA, CharClass::Punct}, {0x1000, 0x102A, CharClass::Letter}, {0x102B, 0x103E, CharClass::Mark}, {0x103F, 0x103F, CharClass::Letter},
    {0x1040, 0x1049, CharClass::Number}, {0x104A, 0x104F, CharClass::Punct}, {0x1050, 0x1055, CharClass::Letter}, {0x1056, 0x1059, CharClass::Mark},
    {0x105A, 0x105D, CharClass::Letter}, {0x105E, 0x1060, CharClass::Mark}, {0x1061, 0x1061, CharClass::Letter}, {0x1062, 0x1064, CharClass::Mark},
    {0x1065, 0x1066, CharClass::Letter}, {0x1067, 0x106D, CharClass::Mark}, {0x106E, 0x1070, CharClass::Letter}, {0x1071, 0x1074, CharClass::Mark},
    {0x1075, 0x1081, CharClass::Letter}, {0x1082, 0x108D, CharClass::Mark}, {0x108E, 0x108E, CharClass::Letter}, {0x108F, 0x108F, CharClass::Mark},
    {0x1090, 0x1099, CharClass::Number}, {0x109A, 0x109D, CharClass::Mark}, {0x109E, 0x109F, CharClass::Symbol}, {0x10A0, 0x10C5, CharClass::Letter},
    {0x10C7, 0x10C7, CharClass::Letter}, {0x10CD, 0x10CD, CharClass::Letter}, {0x10D0, 0x10FA, CharClass::Letter}, {0x10FB, 0x10FB, CharClass::Punct},
    {0x10FC, 0x1248, CharClass::Letter}, {0x124A, 0x124D, CharClass::Letter}, {0x1250, 0x1256, CharClass::Letter}, {0x1258, 0x1258, CharClass::Letter},
    {0x125A, 0x125D, CharClass::Letter}, {0x1260, 0x1288, CharClass::Letter}, {0x128A, 0x128D, CharClass::Letter}, {0x1290, 0x12B0, CharClass::Letter},
    {0x12B2, 0x12B5, CharClass::Letter}, {0x12B8, 0x12BE, CharClass::Letter}, {0x12C0, 0x12C0, CharClass::Letter}, {0x12C2, 0x12C5, CharClass::Letter},
    {0x12C8, 0x12D6, CharClass::Letter}, {0x12D8, 0x1310, CharClass::Letter}, {0x1312, 0x1315, CharClass::Letter}, {0x1318, 0x135A, CharClass::Letter},
    {0x135D, 0x135F, CharClass::Mark}, {0x1360, 0x1368, CharClass::Punct}, {0x1369, 0x137C, CharClass::Number}, {0x1380, 0x138F, CharClass::Letter},
    {0x1390, 0x1399, CharClass::Symbol}, {0x13A0, 0x13F5, CharClass::Letter}, {0x13F8, 0x13FD, CharClass::Letter}, {0x1400, 0x1400, CharClass::Punct},
    {0x1401, 0x166C, CharClass::Letter}, {0x166D, 0x166D, CharClass::Symbol}, {0x166E, 0x166E, CharClass::Punct}, {0x166F, 0x167F, CharClass::Letter},
    {0x1680, 0x1680, CharClass::Separator}, {0x1681, 0x169A, CharClass::Letter}, {0x169B, 0x169C, CharClass::Punct}, {0x16A0, 0x16EA, CharClass::Letter},
    {0x16EB, 0x16ED, CharClass::Punct}, {0x16EE, 0x16F0, CharClass::Number}, {0x16F1, 0x16F8, CharClass::Letter}, {0x1700, 0x170C, CharClass::Letter},
    {0x170E, 0x1711, CharClass::Letter}, {0x1712, 0x1714, CharClass::Mark}, {0x1720, 0x1731, CharClass::Letter}, {0x1732, 0x1734, CharClass::Mark},
    {0x1735, 0x1736, CharClass::Punct}, {0x1740, 0x1751, CharClass::Letter}, {0x1752, 0x1753, CharClass::Mark}, {0x1760, 0x176C, CharClass::Letter},
    {0x176E, 0x1770, CharClass::Letter}, {0x1772, 0x1773, CharClass::Mark}, {0x1780, 0x17B3, CharClass::Letter}, {0x17B4, 0x17D3, CharClass::Mark},
    {0x17D4, 0x17D6, CharClass::Punct}, {0x17D7, 0x17D7, CharClass::Letter}, {0x17D8, 0x17DA, CharClass::Punct}, {0x17DB, 0x17DB, CharClass::Symbol},
    {0x17DC, 0x17DC, CharClass::Letter}, {0x17DD, 0x17DD, CharClass::Mark}, {0x17E0, 0x17E9, CharClass::Number}, {0x17F0, 0x17F9, CharClass::Number},
    {0x1800, 0x180A, CharClass::Punct}, {0x180B, 0x180D, CharClass::Mark}, {0x1810, 0x1819, CharClass::Number}, {0x1820, 0x1878, CharClass::Letter},
    {0x1880, 0x1884, CharClass::Letter}, {0x1885, 0x1886, CharClass::Mark}, {0x1887, 0x18A8, CharClass::Letter}, {0x18A9, 0x18A9, CharClass::Mark},
    {0x18AA, 0x18AA, CharClass::Letter}, {0x18B0, 0x18F5, CharClass::Letter}, {0x1900, 0x191E, CharClass::Letter}, {0x1920, 0x192B, CharClass::Mark},
    {0x1930, 0x193B, CharClass::Mark}, {0x1940, 0x1940, CharClass::Symbol}, {0x1944, 0x1945, CharClass::Punct}, {0x1946, 0x194F, CharClass::Number},
    {0x1950, 0x196D, CharClass::Letter}, {0x1970, 0x1974, CharClass::Letter}, {0x1980, 0x19AB, CharClass::Letter}, {0x19B0, 0x19C9, CharClass::Letter},
    {0x19D0, 0x19DA, CharClass::Number}, {0x19DE, 0x19FF, CharClass::Symbol}, {0x1A00, 0x1A16, CharClass::Letter}, {0x1A17, 0x1A1B, CharClass::Mark},
    {0x1A1E, 0x1A1F, CharClass::Punct}, {0x1A20, 0x1A54, CharClass::Letter}, {0x1A55, 0x1A5E, CharClass::Mark}, {0x1A60, 0x1A7C, CharClass::Mark},
    {0x1A7F, 0x1A7F, CharClass::Mark}, {0x1A80, 0x1A89, CharClass::Number}, {0x1A90, 0x1A99, CharClass::Number}, {0x1AA0, 0x1AA6, CharClass::Punct},
    {0x1AA7, 0x1AA7, CharClass::Letter}, {0x1AA8, 0x1AAD, CharClass::Punct}, {0x1AB0, 0x1AC0, CharClass::Mark}, {0x1B00, 0x1B04, CharClass::Mark},
    {0x1B05, 0x1B33, CharClass::Letter}, {0x1B34, 0x1B44, CharClass::Mark}, {0x1B45, 0x1B4B, CharClass::Letter}, {0x1B50, 0x1B59, CharClass::Number},
    {0x1B5A, 0x1B60, CharClass::Punct}, {0x1B61, 0x1B6A, CharClass::Symbol}, {0x1B6B, 0x1B73, CharClass::Mark}, {0x1B74, 0x1B7C, CharClass::Symbol},
    {0x1B80, 0x1B82, CharClass::Mark}, {0x1B83, 0x1BA0, CharClass::Letter}, {0x1BA1, 0x1BAD, CharClass::Mark}, {0x1BAE, 0x1BAF, CharClass::Letter},
    {0x1BB0, 0x1BB9, CharClass::Number}, {0x1BBA, 0x1BE5, CharClass::Letter}, {0x1BE6, 0x1BF3, CharClass::Mark}, {0x1BFC, 0x1BFF, CharClass::Punct},
    {0x1C00, 0x1C23, CharClass::Letter}, {0x1C24, 0x1C37, CharClass::Mark}, {0x1C3B, 0x1C3F, CharClass::Punct}, {0x1C40, 0x1C49, CharClass::Number},
    {0x1C4D, 0x1C4F, CharClass::Letter}, {0x1C50, 0x1C59, CharClass::Number}, {0x1C5A, 0x1C7D, CharClass::Letter}, {0x1C7E, 0x1C7F, CharClass::Punct},
    {0x1C80, 0x1C88, CharClass::Letter}, {0x1C90, 0x1CBA, CharClass::Letter}, {0x1CBD, 0x1CBF, CharClass::Letter}, {0x1CC0, 0x1CC7, CharClass::Punct},
    {0x1CD0, 0x1CD2, CharClass::Mark}, {0x1CD3, 0x1CD3, CharClass::Punct}, {0x1CD4, 0x1CE8, CharClass::Mark}, {0x1CE9, 0x1CEC, CharClass::Letter},
    {0x1CED, 0x1CED, CharClass::Mark}, {0x1CEE, 0x1CF3, CharClass::Letter}, {0x1CF4, 0x1CF4, CharClass::Mark}, {0x1CF5, 0x1CF6, CharClass::Letter},
    {0x1CF7, 0x1CF9, CharClass::Mark}, {0x1CFA, 0x1CFA, CharClass::Letter}, {0x1D00, 0x1DBF, CharClass::Letter}, {0x1DC0, 0x1DF9, CharClass::Mark},
    {0x1DFB, 0x1DFF, CharClass::Mark}, {0x1E00, 0x1F15, CharClass::Letter}, {0x1F18, 0x1F1D, CharClass::Letter}, {0x1F20, 0x1F45, CharClass::Letter},
    {0x1F48, 0x1F4D, CharClass::Letter}, {0x1F50, 0x1F57, CharClass::Letter}, {0x1F59, 0x1F59, CharClass::Letter}, {0x1F5B, 0x1F5B, CharClass::Letter},
    {0x1F5D, 0x1F5D, CharClass::Letter}, {0x1F5F, 0x1F7D, CharClass::Letter}, {0x1F80, 0x1FB4, CharClass::Letter}, {0x1FB6, 0x1FBC, CharClass::Letter},
    {0x1FBD, 0x1FBD, CharClass::Symbol}, {0x1FBE, 0x1FBE, CharClass::Letter}, {0x1FBF, 0x1FC1, CharClass::Symbol}, {0x1FC2, 0x1FC4, CharClass::Letter},
    {0x1FC6, 0x1FCC, CharClass::Letter}, {0x1FCD, 0x1FCF, CharClass::Symbol}, {0x1FD0, 0x1FD3, CharClass::Letter}, {0x1FD6, 0x1FDB, CharClass::Letter},
    {0x1FDD, 0x1FDF, CharClass::Symbol}, {0x1FE0, 0x1FEC, CharClass::Letter}, {0x1FED, 0x1FEF, CharClass::Symbol}, {0x1FF2, 0x1FF4, CharClass::Letter},
    {0x1FF6, 0x1FFC, CharClass::Letter}, {0x1FFD, 0x1FFE, CharClass::Symbol}, {0x2000, 0x200A, CharClass::Separator}, {0x2010, 0x2027, CharClass::Punct},
    {0x2028, 0x2029, CharClass::Separator}, {0x202F, 0x202F, CharClass::Separator}, {0x2030, 0x2043, CharClass::Punct}, {0x2044, 0x2044, CharClass::Symbol},
    {0x2045, 0x2051, CharClass::Punct}, {0x2052, 0x2052, CharClass::Symbol}, {0x2053, 0x205E, CharClass::Punct}, {0x205F, 0x205F, CharClass::Separator},
    {0x2070, 0x2070, CharClass::Number}, {0x2071, 0x2071, CharClass::Letter}, {0x2074, 0x2079, CharClass::Number}, {0x207A, 0x207C, CharClass::Symbol},
    {0x207D, 0x207E, CharClass::Punct}, {0x207F, 0x207F, CharClass::Letter}, {0x2080, 0x2089, CharClass::Number}, {0x208A, 0x208C, CharClass::Symbol},
    {0x208D, 0x208E, CharClass::Punct}, {0x2090, 0x209C, CharClass::Letter}, {0x20A0, 0x20BF, CharClass::Symbol}, {0x20D0, 0x20F0, CharClass::Mark},
    {0x2100, 0x2101, CharClass::Symbol}, {0x2102, 0x2102, CharClass::Letter}, {0x2103, 0x2106, CharClass::Symbol}, {0x2107, 0x2107, CharClass::Letter},
    {0x2108, 0x2109, CharClass::Symbol}, {0x210A, 0x2113, CharClass::Letter}, {0x2114, 0x2114, CharClass::Symbol}, {0x2115, 0x2115, CharClass::Letter},
    {0x2116, 0x2118, CharClass::Symbol}, {0x2119, 0x211D, CharClass::Letter}, {0x211E, 0x2123, CharClass::Symbol}, {0x2124, 0x2124, CharClass::Letter},
    {0x2125, 0x2125, CharClass::Symbol}, {0x2126, 0x2126, CharClass::Letter}, {0x2127, 0x2127, CharClass::Symbol}, {0x2128, 0x2128, CharClass::Letter},
    {0x2129, 0x2129, CharClass::Symbol}, {0x212A, 0x212D, CharClass::Letter}, {0x212E, 0x212E, CharClass::Symbol}, {0x212F, 0x2139, CharClass::Letter},
    {0x213A, 0x213B, CharClass::Symbol}, {0x213C, 0x213F, CharClass::Letter}, {0x2140, 0x2144, CharClass::Symbol}, {0x2145, 0x2149, CharClass::Letter},
    {0x214A, 0x214D, CharClass::Symbol}, {0x214E, 0x214E, CharClass::Letter}, {0x214F, 0x214F, CharClass::Symbol}, {0x2150, 0x2182, CharClass::Number},
    {0x2183, 0x2184, CharClass::Letter}, {0x2185, 0x2189, CharClass::Number}, {0x218A, 0x218B, CharClass::Symbol}, {0x2190, 0x2307, CharClass::Symbol},
    {0x2308, 0x230B, CharClass::Punct}, {0x230C, 0x2328, CharClass::Symbol}, {0x2329, 0x232A, CharClass::Punct}, {0x232B, 0x2426, CharClass::Symbol},
    {0x2440, 0x244A, CharClass::Symbol}, {0x2460, 0x249B, CharClass::Number}, {0x249C, 0x24E9, CharClass::Symbol}, {0x24EA, 0x24FF, CharClass::Number},
    {0x2500, 0x2767, CharClass::Symbol}, {0x2768, 0x2775, CharClass::Punct}, {0x2776, 0x2793, CharClass::Number}, {0x2794, 0x27C4, CharClass::Symbol},
    {0x27C5, 0x27C6, CharClass::Punct}, {0x27C7, 0x27E5, CharClass::Symbol}, {0x27E6, 0x27EF, CharClass::Punct}, {0x27F0, 0x2982, CharClass::Symbol},
    {0x2983, 0x2998, CharClass::Punct}, {0x2999, 0x29D7, CharClass::Symbol}, {0x29D8, 0x29DB, CharClass::Punct}, {0x29DC, 0x29FB, CharClass::Symbol},
    {0x29FC, 0x29FD, CharClass::Punct}, {0x29FE, 0x2B73, CharClass::Symbol}, {0x2B76, 0x2B95, CharClass::Symbol}, {0x2B97, 0x2BFF, CharClass::Symbol},
    {0x2C00, 0x2C2E, CharClass::Letter}, {0x2C30, 0x2C5E, CharClass::Letter}, {0x2C60, 0x2CE4, CharClass::Letter}, {0x2CE5, 0x2CEA, CharClass::Symbol},
    {0x2CEB, 0x2CEE, CharClass::Letter}, {0x2CEF, 0x2CF1, CharClass::Mark}, {0x2CF2, 0x2CF3, CharClass::Letter}, {0x2CF9, 0x2CFC, CharClass::Punct},
    {0x2CFD, 0x2CFD, CharClass::Number}, {0x2CFE, 0x2CFF, CharClass::Punct}, {0x2D00, 0x2D25, CharClass::Letter}, {0x2D27, 0x2D27, CharClass::Letter},
    {0x2D2D, 0x2D2D, CharClass::Letter}, {0x2D30, 0x2D67, CharClass::Letter}, {0x2D6F, 0x2D6F, CharClass::Letter}, {0x2D70, 0x2D70, CharClass::Punct},
    {0x2D7F, 0x2D7F, CharClass::Mark}, {0x2D80, 0x2D96, CharClass::Letter}, {0x2DA0, 0x2DA6, CharClass::Letter}, {0x2DA8, 0x2DAE, CharClass::Letter},
    {0x2DB0, 0x2DB6, CharClass::Letter}, {0x2DB8, 0x2DBE, CharClass::Letter}, {0x2DC0, 0x2DC6, CharClass::Letter}, {0x2DC8, 0x2DCE, CharClass::Letter},
    {0x2DD0, 0x2DD6, CharClass::Letter}, {0x2DD8, 0x2DDE, CharClass::Letter}, {0x2DE0, 0x2DFF, CharClass::Mark}, {0x2E00, 0x2E2E, CharClass::Punct},
    {0x2E2F, 0x2E2F, CharClass::Letter}, {0x2E30, 0x2E4F, CharClass::Punct}, {0x2E50, 0x2E51, CharClass::Symbol}, {0x2E52, 0x2E52, CharClass::Punct},
    {0x2E80, 0x2E99, CharClass::Symbol}, {0x2E9B, 0x2EF3, CharClass::Symbol}, {0x2F00, 0x2FD5, CharClass::Symbol}, {0x2FF0, 0x2FFB, CharClass::Symbol},
    {0x3000, 0x3000, CharClass::Separator}, {0x3001, 0x3003, CharClass::Punct}, {0x3004, 0x3004, CharClass::Symbol}, {0x3005, 0x3006, CharClass::Letter},
    {0x3007, 0x3007, CharClass::Number}, {0x3008, 0x3011, CharClass::Punct}, {0x3012, 0x3013, CharClass::Symbol}, {0x3014, 0x301F, CharClass::Punct},
    {0x3020, 0x3020, CharClass::Symbol}, {0x3021, 0x3029, CharClass::Number}, {0x302A, 0x302F, CharClass::Mark}, {0x3030, 0x3030, CharClass::Punct},
    {0x3031, 0x3035, CharClass::Letter}, {0x3036, 0x3037, CharClass::Symbol}, {0x3038, 0x303A, CharClass::Number}, {0x303B, 0x303C, CharClass::Letter},
    {0x303D, 0x303D, CharClass::Punct}, {0x303E, 0x303F, CharClass::Symbol}, {0x3041, 0x3096, CharClass::Letter}, {0x3099, 0x309A, CharClass::Mark},
    {0x309B, 0x309C, CharClass::Symbol}, {0x309D, 0x309F, CharClass::Letter}, {0x30A0, 0x30A0, CharClass::Punct}, {0x30A1, 0x30FA, CharClass::Letter},
    {0x30FB, 0x30FB, CharClass::Punct}, {0x30FC, 0x30FF, CharClass::Letter}, {0x3105, 0x312F, CharClass::Letter}, {0x3131, 0x318E, CharClass::Letter},
    {0x3190, 0x3191, CharClass::Symbol}, {0x3192, 0x3195, CharClass::Number}, {0x3196, 0x319F, CharClass::Symbol}, {0x31A0, 0x31BF, CharClass::Letter},
    {0x31C0, 0x31E3, CharClass::Symbol}, {0x31F0, 0x31FF, CharClass::Letter}, {0x3200, 0x321E, CharClass::Symbol}, {0x3220, 0x3229, CharClass::Number},
    {0x322A, 0x3247, CharClass::Symbol}, {0x3248, 0x324F, CharClass::Number}, {0x3250, 0x3250, CharClass::Symbol}, {0x3251, 0x325F, CharClass::Number},
    {0x3260, 0x327F, CharClass::Symbol}, {0x3280, 0x3289, CharClass::Number}, {0x328A, 0x32B0, CharClass::Symbol}, {0x32B1, 0x32BF, CharClass::Number},
    {0x32C0, 0x33FF, CharClass::Symbol}, {0x3400, 0x4DBF, CharClass::Letter}, {0x4DC0, 0x4DFF, CharClass::Symbol}, {0x4E00, 0x9FFC, CharClass::Letter},
    {0xA000, 0xA48C, CharClass::Letter}, {0xA490, 0xA4C6, CharClass::Symbol}, {0xA4D0, 0xA4FD, CharClass::Letter}, {0xA4FE, 0xA4FF, CharClass::Punct},
    {0xA500, 0xA60C, CharClass::Letter}, {0xA60D, 0xA60F, CharClass::Punct}, {0xA610, 0xA61F, CharClass::Letter}, {0xA620, 0xA629, CharClass::Number},
    {0xA62A, 0xA62B, CharClass::Letter}, {0xA640, 0xA66E, CharClass::Letter}, {0xA66F, 0xA672, CharClass::Mark}, {0xA673, 0xA673, CharClass::Punct},
    {0xA674, 0xA67D, CharClass::Mark}, {0xA67E, 0xA67E, CharClass::Punct}, {0xA67F, 0xA69D, CharClass::Letter}, {0xA69E, 0xA69F, CharClass::Mark},
    {0xA6A0, 0xA6E5, CharClass::Letter}, {0xA6E6, 0xA6EF, CharClass::Number}, {0xA6F0, 0xA6F1, CharClass::Mark}, {0xA6F2, 0xA6F7, CharClass::Punct},
    {0xA700, 0xA716, CharClass::Symbol}, {0xA717, 0xA71F, CharClass::Letter}, {0xA720, 0xA721, CharClass::Symbol}, {0xA722, 0xA788, CharClass::Letter},
    {0xA789, 0xA78A, CharClass::Symbol}, {0xA78B, 0xA7BF, CharClass::Letter}, {0xA7C2, 0xA7CA, CharClass::Letter}, {0xA7F5, 0xA801, CharClass::Letter},
    {0xA802, 0xA802, CharClass::Mark}, {0xA803, 0xA805, CharClass::Letter}, {0xA806, 0xA806, CharClass::Mark}, {0xA807, 0xA80A, CharClass::Letter},
    {0xA80B, 0xA80B, CharClass::Mark}, {0xA80C, 0xA822, CharClass::Letter}, {0xA823, 0xA827, CharClass::Mark}, {0xA828, 0xA82B, CharClass::Symbol},
    {0xA82C, 0xA82C, CharClass::Mark}, {0xA830, 0xA835, CharClass::Number}, {0xA836, 0xA839, CharClass::Symbol}, {0xA840, 0xA873, CharClass::Letter},
    {0xA874, 0xA877, CharClass::Punct}, {0xA880, 0xA881, CharClass::Mark}, {0xA882, 0xA8B3, CharClass::Letter}, {0xA8B4, 0xA8C5, CharClass::Mark},
    {0xA8CE, 0xA8CF, CharClass::Punct}, {0xA8D0, 0xA8D9, CharClass::Number}, {0xA8E0, 0xA8F1, CharClass::Mark}, {0xA8F2, 0xA8F7, CharClass::Letter},
    {0xA8F8, 0xA8FA, CharClass::Punct}, {0xA8FB, 0xA8FB, CharClass::Letter}, {0xA8FC, 0xA8FC, CharClass::Punct}, {0xA8FD, 0xA8FE, CharClass::Letter},
    {0xA8FF, 0xA8FF, CharClass::Mark}, {0xA900, 0xA909, CharClass::Number}, {0xA90A, 0xA925, CharClass::Letter}, {0xA926, 0xA92D, CharClass::Mark},
    {0xA92E, 0xA92F, CharClass::Punct}, {0xA930, 0xA946, CharClass::Letter}, {0xA947, 0xA953, CharClass::Mark}, {0xA95F, 0xA95F, CharClass::Punct},
    {0xA960, 0xA97C, CharClass::Letter}, {0xA980, 0xA983, CharClass::Mark}, {0xA984, 0xA9B2, CharClass::Letter}, {0xA9B3, 0xA9C0, CharClass::Mark},
    {0xA9C1, 0xA9CD, CharClass::Punct}, {0xA9CF, 0xA9CF, CharClass::Letter}, {0xA9D0, 0xA9D9, CharClass::Number}, {0xA9DE, 0xA9DF, CharClass::Punct},
    {0xA9E0, 0xA9E4, CharClass::Letter}, {0xA9E5, 0xA9E5, CharClass::Mark}, {0xA9E6, 0xA9EF, CharClass::Letter}, {0xA9F0, 0xA9F9, CharClass::Number},
    {0xA9FA, 0xA9FE, CharClass::Letter}, {0xAA00, 0xAA28, CharClass::Letter}, {0xAA29, 0xAA36, CharClass::Mark}, {0xAA40, 0xAA42, CharClass::Letter},
    {0xAA43, 0xAA43, CharClass::Mark}, {0xAA44, 0xAA4B, CharClass::Letter}, {0xAA4C, 0xAA4D, CharClass::Mark}, {0xAA50, 0xAA59, CharClass::Number},
    {0xAA5C, 0xAA5F, CharClass::Punct}, {0xAA60, 0xAA76, CharClass::Letter}, {0xAA77, 0xAA79, CharClass::Symbol}, {0xAA7A, 0xAA7A, CharClass::Letter},
    {0xAA7B, 0xAA7D, CharClass::Mark}, {0xAA7E, 0xAAAF, CharClass::Letter}, {0xAAB0, 0xAAB0, CharClass::Mark}, {0xAAB1, 0xAAB1, CharClass::Letter},
    {0xAAB2, 0xAAB4, CharClass::Mark}, {0xAAB5, 0xAAB6, CharClass::Letter}, {0xAAB7, 0xAAB8, CharClass::Mark}, {0xAAB9, 0xAABD, CharClass::Letter},
    {0xAABE, 0xAABF, CharClass::Mark}, {0xAAC0, 0xAAC0, CharClass::Letter}, {0xAAC1, 0xAAC1, CharClass::Mark}, {0xAAC2, 0xAAC2, CharClass::Letter},
    {0xAADB, 0xAADD, CharClass::Letter}, {0xAADE, 0xAADF, CharClass::Punct}, {0xAAE0, 0xAAEA, CharClass::Letter}, {0xAAEB, 0xAAEF, CharClass::Mark},
    {0xAAF0, 0xAAF1, CharClass::Punct}, {0xAAF2, 0xAAF4, CharClass::Letter}, {0xAAF5, 0xAAF6, CharClass::Mark}, {0xAB01, 0xAB06, CharClass::Letter},
    {0xAB09, 0xAB0E, CharClass::Letter}, {0xAB11, 0xAB16, CharClass::Letter}, {0xAB20, 0xAB26, CharClass::Letter}, {0xAB28, 0xAB2E, CharClass::Letter},
    {0xAB30, 0xAB5A, CharClass::Letter}, {0xAB5B, 0xAB5B, CharClass::Symbol}, {0xAB5C, 0xAB69, CharClass::Letter}, {0xAB6A, 0xAB6B, CharClass::Symbol},
    {0xAB70, 0xABE2, CharClass::Letter}, {0xABE3, 0xABEA, CharClass::Mark}, {0xABEB, 0xABEB, CharClass::Punct}, {0xABEC, 0xABED, CharClass::Mark},
    {0xABF0, 0xABF9, CharClass::Number}, {0xAC00, 0xD7A3, CharClass::Letter}, {0xD7B0, 0xD7C6, CharClass::Letter}, {0xD7CB, 0xD7FB, CharClass::Letter},
    {0xF900, 0xFA6D, CharClass::Letter}, {0xFA70, 0xFAD9, CharClass::Letter}, {0xFB00, 0xFB06, CharClass::Letter}, {0xFB13, 0xFB17, CharClass::Letter},
    {0xFB1D, 0xFB1D, CharClass::Letter}, {0xFB1E, 0xFB1E, CharClass::Mark}, {0xFB1F, 0xFB28, CharClass::Letter}, {0xFB29, 0xFB29, CharClass::Symbol},
    {0xFB2A, 0xFB36, CharClass::Letter}, {0xFB38, 0xFB3C, CharClass::Letter}, {0xFB3E, 0xFB3E, CharClass::Letter}, {0xFB40, 0xFB41, CharClass::Letter},
    {0xFB43, 0xFB44, CharClass::Letter}, {0xFB46, 0xFBB1, CharClass::Letter}, {0xFBB2, 0xFBC1, CharClass::Symbol}, {0xFBD3, 0xFD3D, CharClass::Letter},
    {0xFD3E, 0xFD3F, CharClass::Punct}, {0xFD50, 0xFD8F, CharClass::Letter}, {0xFD92, 0xFDC7, CharClass::Letter}, {0xFDF0, 0xFDFB, CharClass::Letter},
    {0xFDFC, 0xFDFD, CharClass::Symbol}, {0xFE00, 0xFE0F, CharClass::Mark}, {0xFE10, 0xFE19, CharClass::Punct}, {0xFE20, 0xFE2F, CharClass::Mark},
    {0xFE30, 0xFE52, CharClass::Punct}, {0xFE54, 0xFE61, CharClass::Punct}, {0xFE62, 0xFE62, CharClass::Symbol}, {0xFE63, 0xFE63, CharClass::Punct},
    {0xFE64, 0xFE66, CharClass::Symbol}, {0xFE68, 0xFE68, CharClass::Punct}, {0xFE69, 0xFE69, CharClass::Symbol}, {0xFE6A, 0xFE6B, CharClass::Punct},
    {0xFE70, 0xFE74, CharClass::Letter}, {0xFE76, 0xFEFC, CharClass::Letter}, {0xFF01, 0xFF03, CharClass::Punct}, {0xFF04, 0xFF04, CharClass::Symbol},
    {0xFF05, 0xFF0A, CharClass::Punct}, {0xFF0B, 0xFF0B, CharClass::Symbol}, {0xFF0C, 0xFF0F, CharClass::Punct}, {0xFF10, 0xFF19, CharClass::Number},
    {0xFF1A, 0xFF1B, CharClass::Punct}, {0xFF1C, 0xFF1E, CharClass::Symbol}, {0xFF1F, 0xFF20, CharClass::Punct}, {0xFF21, 0xFF3A, CharClass::Letter},
    {0xFF3B, 0xFF3D, CharClass::Punct}, {0xFF3E, 0xFF3E, CharClass::Symbol}, {0xFF3F, 0xFF3F, CharClass::Punct}, {0xFF40, 0xFF40, CharClass::Symbol},
    {0xFF41, 0xFF5A, CharClass::Letter}, {0xFF5B, 0xFF5B, CharClass::Punct}, {0xFF5C, 0xFF5C, CharClass::Symbol}, {0xFF5D, 0xFF5D, CharClass::Punct},
    {0xFF5E, 0xFF5E, CharClass::Symbol}, {0xFF5F, 0xFF65, CharClass::Punct}, {0xFF66, 0xFFBE, CharClass::Letter}, {0xFFC2, 0xFFC7, CharClass::Letter},
    {0xFFCA, 0xFFCF, CharClass::Letter}, {0xFFD2, 0xFFD7, CharClass::Letter}, {0xFFDA, 0xFFDC, CharClass::Letter}, {0xFFE0, 0xFFE6, CharClass::Symbol},
    {0xFFE8, 0xFFEE, CharClass::Symbol}, {0xFFFC, 0xFFFD, CharClass::Symbol}, {0x10000, 0x1000B, CharClass::Letter}, {0x1000D, 0x10026, CharClass::Letter},
    {0x10028, 0x1003A, CharClass::Letter}, {0x1003C, 0x1003D, CharClass::Letter}, {0x1003F, 0x1004D, CharClass::Letter}, {0x10050, 0x1005D, CharClass::Letter},
    {0x10080, 0x100FA, CharClass::Letter}, {0x10100, 0x10102, CharClass::Punct}, {0x10107, 0x10133, CharClass::Number}, {0x10137, 0x1013F, CharClass::Symbol},
    {0x10140, 0x10178, CharClass::Number}, {0x10179, 0x10189, CharClass::Symbol}, {0x1018A, 0x1018B, CharClass::Number}, {0x1018C, 0x1018E, CharClass::Symbol},
    {0x10190, 0x1019C, CharClass::Symbol}, {0x101A0, 0x101A0, CharClass::Symbol}, {0x101D0, 0x101FC, CharClass::Symbol}, {0x101FD, 0x101FD, CharClass::Mark},
    {0x10280, 0x1029C, CharClass::Letter}, {0x102A0, 0x102D0, CharClass::Letter}, {0x102E0, 0x102E0, CharClass::Mark}, {0x102E1, 0x102FB, CharClass::Number},
    {0x10300, 0x1031F, CharClass::Letter}, {0x10320, 0x10323, CharClass::Number}, {0x1032D, 0x10340, CharClass::Letter}, {0x10341, 0x10341, CharClass::Number},
    {0x10342, 0x10349, CharClass::Letter}, {0x1034A, 0x1034A, CharClass::Number}, {0x10350, 0x10375, CharClass::Letter}, {0x10376, 0x1037A, CharClass::Mark},
    {0x10380, 0x1039D, CharClass::Letter}, {0x1039F, 0x1039F, CharClass::Punct}, {0x103A0, 0x103C3, CharClass::Letter}, {0x103C8, 0x103CF, CharClass::Letter},
    {0x103D0, 0x103D0, CharClass::Punct}, {0x103D1, 0x103D5, CharClass::Number}, {0x10400, 0x1049D, CharClass::Letter}, {0x104A0, 0x104A9, CharClass::Number},
    {0x104B0, 0x104D3, CharClass::Letter}, {0x104D8, 0x104FB, CharClass::Letter}, {0x10500, 0x10527, CharClass::Letter}, {0x10530, 0x10563, CharClass::Letter},
    {0x1056F, 0x1056F, CharClass::Punct}, {0x10600, 0x10736, CharClass::Letter}, {0x10740, 0x10755, CharClass::Letter}, {0x10760, 0x10767, CharClass::Letter},
    {0x10800, 0x10805, CharClass::Letter}, {0x10808, 0x10808, CharClass::Letter}, {0x1080A, 0x10835, CharClass::Letter}, {0x10837, 0x10838, CharClass::Letter},
    {0x1083C, 0x1083C, CharClass::Letter}, {0x1083F, 0x10855, CharClass::Letter}, {0x10857, 0x10857, CharClass::Punct}, {0x10858, 0x1085F, CharClass::Number},
    {0x10860, 0x10876, CharClass::Letter}, {0x10877, 0x10878, CharClass::Symbol}, {0x10879, 0x1087F, CharClass::Number}, {0x10880, 0x1089E, CharClass::Letter},
    {0x108A7, 0x108AF, CharClass::Number}, {0x108E0, 0x108F2, CharClass::Letter}, {0x108F4, 0x108F5, CharClass::Letter}, {0x108FB, 0x108FF, CharClass::Number},
    {0x10900, 0x10915, CharClass::Letter}, {0x10916, 0x1091B, CharClass::Number}, {0x1091F, 0x1091F, CharClass::Punct}, {0x10920, 0x10939, CharClass::Letter},
    {0x1093F, 0x1093F, CharClass::Punct}, {0x10980, 0x109B7, CharClass::Letter}, {0x109BC, 0x109BD, CharClass::Number}, {0x109BE, 0x109BF, CharClass::Letter},
    {0x109C0, 0x109CF, CharClass::Number}, {0x109D2, 0x109FF, CharClass::Number}, {0x10A00, 0x10A00, CharClass::Letter}, {0x10A01, 0x10A03, CharClass::Mark},
    {0x10A05, 0x10A06, CharClass::Mark}, {0x10A0C, 0x10A0F, CharClass::Mark}, {0x10A10, 0x10A13, CharClass::Letter}, {0x10A15, 0x10A17, CharClass::Letter},
    {0x10A19, 0x10A35, CharClass::Letter}, {0x10A38, 0x10A3A, CharClass::Mark}, {0x10A3F, 0x10A3F, CharClass::Mark}, {0x10A40, 0x10A48, CharClass::Number},
    {0x10A50, 0x10A58, CharClass::Punct}, {0x10A60, 0x10A7C, CharClass::Letter}, {0x10A7D, 0x10A7E, CharClass::Number}, {0x10A7F, 0x10A7F, CharClass::Punct},
    {0x10A80, 0x10A9C, CharClass::Letter}, {0x10A9D, 0x10A9F, CharClass::Number}, {0x10AC0, 0x10AC7, CharClass::Letter}, {0x10AC8, 0x10AC8, CharClass::Symbol},
    {0x10AC9, 0x10AE4, CharClass::Letter}, {0x10AE5, 0x10AE6, CharClass::Mark}, {0x10AEB, 0x10AEF, CharClass::Number}, {0x10AF0, 0x10AF6, CharClass::Punct},
    {0x10B00, 0x10B35, CharClass::Letter}, {0x10B39, 0x10B3F, CharClass::Punct}, {0x10B40, 0x10B55, CharClass::Letter}, {0x10B58, 0x10B5F, CharClass::Number},
    {0x10B60, 0x10B72, CharClass::Letter}, {0x10B78, 0x10B7F, CharClass::Number}, {0x10B80, 0x10B91, CharClass::Letter}, {0x10B99, 0x10B9C, CharClass::Punct},
    {0x10BA9, 0x10BAF, CharClass::Number}, {0x10C00, 0x10C48, CharClass::Letter}, {0x10C80, 0x10CB2, CharClass::Letter}, {0x10CC0, 0x10CF2, CharClass::Letter},
    {0x10CFA, 0x10CFF, CharClass::Number}, {0x10D00, 0x10D23, CharClass::Letter}, {0x10D24, 0x10D27, CharClass::Mark}, {0x10D30, 0x10D39, CharClass::Number},
    {0x10E60, 0x10E7E, CharClass::Number}, {0x10E80, 0x10EA9, CharClass::Letter}, {0x10EAB, 0x10EAC, CharClass::Mark}, {0x10EAD, 0x10EAD, CharClass::Punct},
    {0x10EB0, 0x10EB1, CharClass::Letter}, {0x10F00, 0x10F1C, CharClass::Letter}, {0x10F1D, 0x10F26, CharClass::Number}, {0x10F27, 0x10F27, CharClass::Letter},
    {0x10F30, 0x10F45, CharClass::Letter}, {0x10F46, 0x10F50, CharClass::Mark}, {0x10F51, 0x10F54, CharClass::Number}, {0x10F55, 0x10F59, CharClass::Punct},
    {0x10FB0, 0x10FC4, CharClass::Letter}, {0x10FC5, 0x10FCB, CharClass::Number}, {0x10FE0, 0x10FF6, CharClass::Letter}, {0x11000, 0x11002, CharClass::Mark},
    {0x11003, 0x11037, CharClass::Letter}, {0x11038, 0x11046, CharClass::Mark}, {0x11047, 0x1104D, CharClass::Punct}, {0x11052, 0x1106F, CharClass::Number},
    {0x1107F, 0x11082, CharClass::Mark}, {0x11083, 0x110AF, CharClass::Letter}, {0x110B0, 0x110BA, CharClass::Mark}, {0x110BB, 0x110BC, CharClass::Punct},
    {0x110BE, 0x110C1, CharClass::Punct}, {0x110D0, 0x110E8, CharClass::Letter}, {0x110F0, 0x110F9, CharClass::Number}, {0x11100, 0x11102, CharClass::Mark},
    {0x11103, 0x11126, CharClass::Letter}, {0x11127, 0x11134, CharClass::Mark}, {0x11136, 0x1113F, CharClass::Number}, {0x11140, 0x11143, CharClass::Punct},
    {0x11144, 0x11144, CharClass::Letter}, {0x11145, 0x11146, CharClass::Mark}, {0x11147, 0x11147, CharClass::Letter}, {0x11150, 0x11172, CharClass::Letter},
    {0x11173, 0x11173, CharClass::Mark}, {0x11174, 0x11175, CharClass::Punct}, {0x11176, 0x11176, CharClass::Letter}, {0x11180, 0x11182, CharClass::Mark},
    {0x11183, 0x111B2, CharClass::Letter}, {0x111B3, 0x111C0, CharClass::Mark}, {0x111C1, 0x111C4, CharClass::Letter}, {0x111C5, 0x111C8, CharClass::Punct},
    {0x111C9, 0x111CC, CharClass::Mark}, {0x111CD, 0x111CD, CharClass::Punct}, {0x111CE, 0x111CF, CharClass::Mark}, {0x111D0, 0x111D9, CharClass::Number},
    {0x111DA, 0x111DA, CharClass::Letter}, {0x111DB, 0x111DB, CharClass::Punct}, {0x111DC, 0x111DC, CharClass::Letter}, {0x111DD, 0x111DF, CharClass::Punct},
    {0x111E1, 0x111F4, CharClass::Number}, {0x11200, 0x11211, CharClass::Letter}, {0x11213, 0x1122B, CharClass::Letter}, {0x1122C, 0x11237, CharClass::Mark},
    {0x11238, 0x1123D, CharClass::Punct}, {0x1123E, 0x1123E, CharClass::Mark}, {0x11280, 0x11286, CharClass::Letter}, {0x11288, 0x11288, CharClass::Letter},
    {0x1128A, 0x1128D, CharClass::Letter}, {0x1128F, 0x1129D, CharClass::Letter}, {0x1129F, 0x112A8, CharClass::Letter}, {0x112A9, 0x112A9, CharClass::Punct},
    {0x112B0, 0x112DE, CharClass::Letter}, {0x112DF, 0x112EA, CharClass::Mark}, {0x112F0, 0x112F9, CharClass::Number}, {0x11300, 0x11303, CharClass::Mark},
    {0x11305, 0x1130C, CharClass::Letter}, {0x1130F, 0x11310, CharClass::Letter}, {0x11313, 0x11328, CharClass::Letter}, {0x1132A, 0x11330, CharClass::Letter},
    {0x11332, 0x11333, CharClass::Letter}, {0x11335, 0x11339, CharClass::Letter}, {0x1133B, 0x1133C, CharClass::Mark}, {0x1133D, 0x1133D, CharClass::Letter},
    {0x1133E, 0x11344, CharClass::Mark}, {0x11347, 0x11348, CharClass::Mark}, {0x1134B, 0x1134D, CharClass::Mark}, {0x11350, 0x11350, CharClass::Letter},
    {0x11357, 0x11357, CharClass::Mark}, {0x1135D, 0x11361, CharClass::Letter}, {0x11362, 0x11363, CharClass::Mark}, {0x11366, 0x1136C, CharClass::Mark},
    {0x11370, 0x11374, CharClass::Mark}, {0x11400, 0x11434, CharClass::Letter}, {0x11435, 0x11446, CharClass::Mark}, {0x11447, 0x1144A, CharClass::Letter},
    {0x1144B, 0x1144F, CharClass::Punct}, {0x11450, 0x11459, CharClass::Number}, {0x1145A, 0x1145B, CharClass::Punct}, {0x1145D, 0x1145D, CharClass::Punct},
    {0x1145E, 0x1145E, CharClass::Mark}, {0x1145F, 0x11461, CharClass::Letter}, {0x11480, 0x114AF, CharClass::Letter}, {0x114B0, 0x114C3, CharClass::Mark},
    {0x114C4, 0x114C5, CharClass::Letter}, {0x114C6, 0x114C6, CharClass::Punct}, {0x114C7, 0x114C7, CharClass::Letter}, {0x114D0, 0x114D9, CharClass::Number},
    {0x11580, 0x115AE, CharClass::Letter}, {0x115AF, 0x115B5, CharClass::Mark}, {0x115B8, 0x115C0, CharClass::Mark}, {0x115C1, 0x115D7, CharClass::Punct},
    {0x115D8, 0x115DB, CharClass::Letter}, {0x115DC, 0x115DD, CharClass::Mark}, {0x11600, 0x1162F, CharClass::Letter}, {0x11630, 0x11640, CharClass::Mark},
    {0x11641, 0x11643, CharClass::Punct}, {0x11644, 0x11644, CharClass::Letter}, {0x11650, 0x11659, CharClass::Number}, {0x11660, 0x1166C, CharClass::Punct},
    {0x11680, 0x116AA, CharClass::Letter}, {0x116AB, 0x116B7, CharClass::Mark}, {0x116B8, 0x116B8, CharClass::Letter}, {0x116C0, 0x116C9, CharClass::Number},
    {0x11700, 0x1171A, CharClass::Letter}, {0x1171D, 0x1172B, CharClass::Mark}, {0x11730, 0x1173B, CharClass::Number}, {0x1173C, 0x1173E, CharClass::Punct},
    {0x1173F, 0x1173F, CharClass::Symbol}, {0x11800, 0x1182B, CharClass::Letter}, {0x1182C, 0x1183A, CharClass::Mark}, {0x1183B, 0x1183B, CharClass::Punct},
    {0x118A0, 0x118DF, CharClass::Letter}, {0x118E0, 0x118F2, CharClass::Number}, {0x118FF, 0x11906, CharClass::Letter}, {0x11909, 0x11909, CharClass::Letter},
    {0x1190C, 0x11913, CharClass::Letter}, {0x11915, 0x11916, CharClass::Letter}, {0x11918, 0x1192F, CharClass::Letter}, {0x11930, 0x11935, CharClass::Mark},
    {0x11937, 0x11938, CharClass::Mark}, {0x1193B, 0x1193E, CharClass::Mark}, {0x1193F, 0x1193F, CharClass::Letter}, {0x11940, 0x11940, CharClass::Mark},
    {0x11941, 0x11941, CharClass::Letter}, {0x11942, 0x11943, CharClass::Mark}, {0x11944, 0x11946, CharClass::Punct}, {0x11950, 0x11959, CharClass::Number},
    {0x119A0, 0x119A7, CharClass::Letter}, {0x119AA, 0x119D0, CharClass::Letter}, {0x119D1, 0x119D7, CharClass::Mark}, {0x119DA, 0x119E0, CharClass::Mark},
    {0x119E1, 0x119E1, CharClass::Letter}, {0x119E2, 0x119E2, CharClass::Punct}, {0x119E3, 0x119E3, CharClass::Letter}, {0x119E4, 0x119E4, CharClass::Mark},
    {0x11A00, 0x11A00, CharClass::Letter}, {0x11A01, 0x11A0A, CharClass::Mark}, {0x11A0B, 0x11A32, CharClass::Letter}, {0x11A33, 0x11A39, CharClass::Mark},
    {0x11A3A, 0x11A3A, CharClass::Letter}, {0x11A3B, 0x11A3E, CharClass::Mark}, {0x11A3F, 0x11A46, CharClass::Punct}, {0x11A47, 0x11A47, CharClass::Mark},
    {0x11A50, 0x11A50, CharClass::Letter}, {0x11A51, 0x11A5B, CharClass::Mark}, {0x11A5C, 0x11A89, CharClass::Letter}, {0x11A8A, 0x11A99, CharClass::Mark},
    {0x11A9A, 0x11A9C, CharClass::Punct}, {0x11A9D, 0x11A9D, CharClass::Letter}, {0x11A9E, 0x11AA2, CharClass::Punct}, {0x11AC0, 0x11AF8, CharClass::Letter},
    {0x11C00, 0x11C08, CharClass::Letter}, {0x11C0A, 0x11C2E, CharClass::Letter}, {0x11C2F, 0x11C36, CharClass::Mark}, {0x11C38, 0x11C3F, CharClass::Mark},
    {0x11C40, 0x11C40, CharClass::Letter}, {0x11C41, 0x11C45, CharClass::Punct}, {0x11C50, 0x11C6C, CharClass::Number}, {0x11C70, 0x11C71, CharClass::Punct},
    {0x11C72, 0x11C8F, CharClass::Letter}, {0x11C92, 0x11CA7, CharClass::Mark}, {0x11CA9, 0x11CB6, CharClass::Mark}, {0x11D00, 0x11D06, CharClass::Letter},
    {0x11D08, 0x11D09, CharClass::Letter}, {0x11D0B, 0x11D30, CharClass::Letter}, {0x11D31, 0x11D36, CharClass::Mark}, {0x11D3A, 0x11D3A, CharClass::Mark},
    {0x11D3C, 0x11D3D, CharClass::Mark}, {0x11D3F, 0x11D45, CharClass::Mark}, {0x11D46, 0x11D46, CharClass::Letter}, {0x11D47, 0x11D47, CharClass::Mark},
    {0x11D50, 0x11D59, CharClass::Number}, {0x11D60, 0x11D65, CharClass::Letter}, {0x11D67, 0x11D68, CharClass::Letter}, {0x11D6A, 0x11D89, CharClass::Letter},
    {0x11D8A, 0x11D8E, CharClass::Mark}, {0x11D90, 0x11D91, CharClass::Mark}, {0x11D93, 0x11D97, CharClass::Mark}, {0x11D98, 0x11D98, CharClass::Letter},
    {0x11DA0, 0x11DA9, CharClass::Number}, {0x11EE0, 0x11EF2, CharClass::Letter}, {0x11EF3, 0x11EF6, CharClass::Mark}, {0x11EF7, 0x11EF8, CharClass::Punct},
    {0x11FB0, 0x11FB0, CharClass::Letter}, {0x11FC0, 0x11FD4, CharClass::Number}, {0x11FD5, 0x11FF1, CharClass::Symbol}, {0x11FFF, 0x11FFF, CharClass::Punct},
    {0x12000, 0x12399, CharClass::Letter}, {0x12400, 0x1246E, CharClass::Number}, {0x12470, 0x12474, CharClass::Punct}, {0x12480, 0x12543, CharClass::Letter},
    {0x13000, 0x1342E, CharClass::Letter}, {0x14400, 0x14646, CharClass::Letter}, {0x16800, 0x16A38, CharClass::Letter}, {0x16A40, 0x16A5E, CharClass::Letter},
    {0x16A60, 0x16A69, CharClass::Number}, {0x16A6E, 0x16A6F, CharClass::Punct}, {0x16AD0, 0x16AED, CharClass::Letter}, {0x16AF0, 0x16AF4, CharClass::Mark},
    {0x16AF5, 0x16AF5, CharClass::Punct}, {0x16B00, 0x16B2F, CharClass::Letter}, {0x16B30, 0x16B36, CharClass::Mark}, {0x16B37, 0x16B3B, CharClass::Punct},
    {0x16B3C, 0x16B3F, CharClass::Symbol}, {0x16B40, 0x16B43, CharClass::Letter}, {0x16B44, 0x16B44, CharClass::Punct}, {0x16B45, 0x16B45, CharClass::Symbol},
    {0x16B50, 0x16B59, CharClass::Number}, {0x16B5B, 0x16B61, CharClass::Number}, {0x16B63, 0x16B77, CharClass::Letter}, {0x16B7D, 0x16B8F, CharClass::Letter},
    {0x16E40, 0x16E7F, CharClass::Letter}, {0x16E80, 0x16E96, CharClass::Number}, {0x16E97, 0x16E9A, CharClass::Punct}, {0x16F00, 0x16F4A, CharClass::Letter},
    {0x16F4F, 0x16F4F, CharClass::Mark}, {0x16F50, 0x16F50, CharClass::Letter}, {0x16F51, 0x16F87, CharClass::Mark}, {0x16F8F, 0x16F92, CharClass::Mark},
    {0x16F93, 0x16F9F, CharClass::Letter}, {0x16FE0, 0x16FE1, CharClass::Letter}, {0x16FE2, 0x16FE2, CharClass::Punct}, {0x16FE3, 0x16FE3, CharClass::Letter},
    {0x16FE4, 0x16FE4, CharClass::Mark}, {0x16FF0, 0x16FF1, CharClass::Mark}, {0x17000, 0x187F7, CharClass::Letter}, {0x18800, 0x18CD5, CharClass::Letter},
    {0x18D00, 0x18D08, CharClass::Letter}, {0x1B000, 0x1B11E, CharClass::Letter}, {0x1B150, 0x1B152, CharClass::Letter}, {0x1B164, 0x1B167, CharClass::Letter},
    {0x1B170, 0x1B2FB, CharClass::Letter}, {0x1BC00, 0x1BC6A, CharClass::Letter}, {0x1BC70, 0x1BC7C, CharClass::Letter}, {0x1BC80, 0x1BC88, CharClass::Letter},
    {0x1BC90, 0x1BC99, CharClass::Letter}, {0x1BC9C, 0x1BC9C, CharClass::Symbol}, {0x1BC9D, 0x1BC9E, CharClass::Mark}, {0x1BC9F, 0x1BC9F, CharClass::Punct},
    {0x1D000, 0x1D0F5, CharClass::Symbol}, {0x1D100, 0x1D126, CharClass::Symbol}, {0x1D129, 0x1D164, CharClass::Symbol}, {0x1D165, 0x1D169, CharClass::Mark},
    {0x1D16A, 0x1D16C, CharClass::Symbol}, {0x1D16D, 0x1D172, CharClass::Mark}, {0x1D17B, 0x1D182, CharClass::Mark}, {0x1D183, 0x1D184, CharClass::Symbol},
    {0x1D185, 0x1D18B, CharClass::Mark}, {0x1D18C, 0x1D1A9, CharClass::Symbol}, {0x1D1AA, 0x1D1AD, CharClass::Mark}, {0x1D1AE, 0x1D1E8, CharClass::Symbol},
    {0x1D200, 0x1D241, CharClass::Symbol}, {0x1D242, 0x1D244, CharClass::Mark}, {0x1D245, 0x1D245, CharClass::Symbol}, {0x1D2E0, 0x1D2F3, CharClass::Number},
    {0x1D300, 0x1D356, CharClass::Symbol}, {0x1D360, 0x1D378, CharClass::Number}, {0x1D400, 0x1D454, CharClass::Letter}, {0x1D456, 0x1D49C, CharClass::Letter},
    {0x1D49E, 0x1D49F, CharClass::Letter}, {0x1D4A2, 0x1D4A2, CharClass::Letter}, {0x1D4A5, 0x1D4A6, CharClass::Letter}, {0x1D4A9, 0x1D4AC, CharClass::Letter},
    {0x1D4AE, 0x1D4B9, CharClass::Letter}, {0x1D4BB, 0x1D4BB, CharClass::Letter}, {0x1D4BD, 0x1D4C3, CharClass::Letter}, {0x1D4C5, 0x1D505, CharClass::Letter},
    {0x1D507, 0x1D50A, CharClass::Letter}, {0x1D50D, 0x1D514, CharClass::Letter}, {0x1D516, 0x1D51C, CharClass::Letter}, {0x1D51E, 0x1D539, CharClass::Letter},
    {0x1D53B, 0x1D53E, CharClass::Letter}, {0x1D540, 0x1D544, CharClass::Letter}, {0x1D546, 0x1D546, CharClass::Letter}, {0x1D54A, 0x1D550, CharClass::Letter},
    {0x1D552, 0x1D6A5, CharClass::Letter}, {0x1D6A8, 0x1D6C0, CharClass::Letter}, {0x1D6C1, 0x1D6C1, CharClass::Symbol}, {0x1D6C2, 0x1D6DA, CharClass::Letter},
    {0x1D6DB, 0x1D6DB, CharClass::Symbol}, {0x1D6DC, 0x1D6FA, CharClass::Letter}, {0x1D6FB, 0x1D6FB, CharClass::Symbol}, {0x1D6FC, 0x1D714, CharClass::Letter},
    {0x1D715, 0x1D715, CharClass::Symbol}, {0x1D716, 0x1D734, CharClass::Letter}, {0x1D735, 0x1D735, CharClass::Symbol}, {0x1D736, 0x1D74E, CharClass::Letter},
    {0x1D74F, 0x1D74F, CharClass::Symbol}, {0x1D750, 0x1D76E, CharClass::Letter}, {0x1D76F, 0x1D76F, CharClass::Symbol}, {0x1D770, 0x1D788, CharClass::Letter},
    {0x1D789, 0x1D789, CharClass::Symbol}, {0x1D78A, 0x1D7A8, CharClass::Letter}, {0x1D7A9, 0x1D7A9, CharClass::Symbol}, {0x1D7AA, 0x1D7C2, CharClass::Letter},
    {0x1D7C3, 0x1D7C3, CharClass::Symbol}, {0x1D7C4, 0x1D7CB, CharClass::Letter}, {0x1D7CE, 0x1D7FF, CharClass::Number}, {0x1D800, 0x1D9FF, CharClass::Symbol},
    {0x1DA00, 0x1DA36, CharClass::Mark}, {0x1DA37, 0x1DA3A, CharClass::Symbol}, {0x1DA3B, 0x1DA6C, CharClass::Mark}, {0x1DA6D, 0x1DA74, CharClass::Symbol},
    {0x1DA75, 0x1DA75, CharClass::Mark}, {0x1DA76, 0x1DA83, CharClass::Symbol}, {0x1DA84, 0x1DA84, CharClass::Mark}, {0x1DA85, 0x1DA86, CharClass::Symbol},
    {0x1DA87, 0x1DA8B, CharClass::Punct}, {0x1DA9B, 0x1DA9F, CharClass::Mark}, {0x1DAA1, 0x1DAAF, CharClass::Mark}, {0x1E000, 0x1E006, CharClass::Mark},
    {0x1E008, 0x1E018, CharClass::Mark}, {0x1E01B, 0x1E021, CharClass::Mark}, {0x1E023, 0x1E024, CharClass::Mark}, {0x1E026, 0x1E02A, CharClass::Mark},
    {0x1E100, 0x1E12C, CharClass::Letter}, {0x1E130, 0x1E136, CharClass::Mark}, {0x1E137, 0x1E13D, CharClass::Letter}, {0x1E140, 0x1E149, CharClass::Number},
    {0x1E14E, 0x1E14E, CharClass::Letter}, {0x1E14F, 0x1E14F, CharClass::Symbol}, {0x1E2C0, 0x1E2EB, CharClass::Letter}, {0x1E2EC, 0x1E2EF, CharClass::Mark},
    {0x1E2F0, 0x1E2F9, CharClass::Number}, {0x1E2FF, 0x1E2FF, CharClass::Symbol}, {0x1E800, 0x1E8C4, CharClass::Letter}, {0x1E8C7, 0x1E8CF, CharClass::Number},
    {0x1E8D0, 0x1E8D6, CharClass::Mark}, {0x1E900, 0x1E943, CharClass::Letter}, {0x1E944, 0x1E94A, CharClass::Mark}, {0x1E94B, 0x1E94B, CharClass::Letter},
    {0x1E950, 0x1E959, CharClass::Number}, {0x1E95E, 0x1E95F, CharClass::Punct}, {0x1EC71, 0x1ECAB, CharClass::Number}, {0x1ECAC, 0x1ECAC, CharClass::Symbol},
    {0x1ECAD, 0x1ECAF, CharClass::Number}, {0x1ECB0, 0x1ECB0, CharClass::Symbol}, {0x1ECB1, 0x1ECB4, CharClass::Number}, {0x1ED01, 0x1ED2D, CharClass::Number},
    {0x1ED2E, 0x1ED2E, CharClass::Symbol}, {0x1ED2F, 0x1ED3D, CharClass::Number}, {0x1EE00, 0x1EE03, CharClass::Letter}, {0x1EE05, 0x1EE1F, CharClass::Letter},
    {0x1EE21, 0x1EE22, CharClass::Letter}, {0x1EE24, 0x1EE24, CharClass::Letter}, {0x1EE27, 0x1EE27, CharClass::Letter}, {0x1EE29, 0x1EE32, CharClass::Letter},
    {0x1EE34, 0x1EE37, CharClass::Letter}, {0x1EE39, 0x1EE39, CharClass::Letter}, {0x1EE3B, 0x1EE3B, CharClass::Letter}, {0x1EE42, 0x1EE42, CharClass::Letter},
    {0x1EE47, 0x1EE47, CharClass::Letter}, {0x1EE49, 0x1EE49, CharClass::Letter}, {0x1EE4B, 0x1EE4B, CharClass::Letter}, {0x1EE4D, 0x1EE4F, CharClass::Letter},
    {0x1EE51, 0x1EE52, CharClass::Letter}, {0x1EE54, 0x1EE54, CharClass::Letter}, {0x1EE57, 0x1EE57, CharClass::Letter}, {0x1EE59, 0x1EE59, CharClass::Letter},
    {0x1EE5B, 0x1EE5B, CharClass::Letter}, {0x1EE5D, 0x1EE5D, CharClass::Letter}, {0x1EE5F, 0x1EE5F, CharClass::Letter}, {0x1EE61, 0x1EE62, CharClass::Letter},
    {0x1EE64, 0x1EE64, CharClass::Letter}, {0x1EE67, 0x1EE6A, CharClass::Letter}, {0x1EE6C, 0x1EE72, CharClass::Letter}, {0x1EE74, 0x1EE77, CharClass::Letter},
    {0x1EE79, 0x1EE7C, CharClass::Letter}, {0x1EE7E, 0x1EE7E, CharClass::Letter}, {0x1EE80, 0x1EE89, CharClass::Letter}, {0x1EE8B, 0x1EE9B, CharClass::Letter},
    {0x1EEA1, 0x1EEA3, CharClass::Letter}, {0x1EEA5, 0x1EEA9, CharClass::Letter}, {0x1EEAB, 0x1EEBB, CharClass::Letter}, {0x1EEF0, 0x1EEF1, CharClass::Symbol},
    {0x1F000, 0x1F02B, CharClass::Symbol}, {0x1F030, 0x1F093, CharClass::Symbol}, {0x1F0A0, 0x1F0AE, CharClass::Symbol}, {0x1F0B1, 0x1F0BF, CharClass::Symbol},
    {0x1F0C1, 0x1F0CF, CharClass::Symbol}, {0x1F0D1, 0x1F0F5, CharClass::Symbol}, {0x1F100, 0x1F10C, CharClass::Number}, {0x1F10D, 0x1F1AD, CharClass::Symbol},
    {0x1F1E6, 0x1F202, CharClass::Symbol}, {0x1F210, 0x1F23B, CharClass::Symbol}, {0x1F240, 0x1F248, CharClass::Symbol}, {0x1F250, 0x1F251, CharClass::Symbol},
    {0x1F260, 0x1F265, CharClass::Symbol}, {0x1F300, 0x1F6D7, CharClass::Symbol}, {0x1F6E0, 0x1F6EC, CharClass::Symbol}, {0x1F6F0, 0x1F6FC, CharClass::Symbol},
    {0x1F700, 0x1F773, CharClass::Symbol}, {0x1F780, 0x1F7D8, CharClass::Symbol}, {0x1F7E0, 0x1F7EB, CharClass::Symbol}, {0x1F800, 0x1F80B, CharClass::Symbol},
    {0x1F810, 0x1F847, CharClass::Symbol}, {0x1F850, 0x1F859, CharClass::Symbol}, {0x1F860, 0x1F887, CharClass::Symbol}, {0x1F890, 0x1F8AD, CharClass::Symbol},
    {0x1F8B0, 0x1F8B1, CharClass::Symbol}, {0x1F900, 0x1F978, CharClass::Symbol}, {0x1F97A, 0x1F9CB, CharClass::Symbol}, {0x1F9CD, 0x1FA53, CharClass::Symbol},
    {0x1FA60, 0x1FA6D, CharClass::Symbol}, {0x1FA70, 0x1FA74, CharClass::Symbol}, {0x1FA78, 0x1FA7A, CharClass::Symbol}, {0x1FA80, 0x1FA86, CharClass::Symbol},
    {0x1FA90, 0x1FAA8, CharClass::Symbol}, {0x1FAB0, 0x1FAB6, CharClass::Symbol}, {0x1FAC0, 0x1FAC2, CharClass::Symbol}, {0x1FAD0, 0x1FAD6, CharClass::Symbol},
    {0x1FB00, 0x1FB92, CharClass::Symbol}, {0x1FB94, 0x1FBCA, CharClass::Symbol}, {0x1FBF0, 0x1FBF9, CharClass::Number}, {0x20000, 0x2A6DD, CharClass::Letter},
    {0x2A700, 0x2B734, CharClass::Letter}, {0x2B740, 0x2B81D, CharClass::Letter}, {0x2B820, 0x2CEA1, CharClass::Letter}, {0x2CEB0, 0x2EBE0, CharClass::Letter},
    {0x2F800, 0x2FA1D, CharClass::Letter}, {0x30000, 0x3134A, CharClass::Letter}, {0xE0100, 0xE01EF, CharClass::Mark},
};

struct FoldPair {
  char32_t from;
  char32_t to;
};

inline constexpr std::size_t kSimpleFoldCount = 1392;
inline constexpr FoldPair kSimpleFolds[kSimpleFoldCount] = {
    {0x41, 0x61}, {0x42, 0x62}, {0x43, 0x63}, {0x44, 0x64}, {0x45, 0x65}, {0x46, 0x66},
    {0x47, 0x67}, {0x48, 0x68}, {0x49, 0x69}, {0x4A, 0x6A}, {0x4B, 0x6B}, {0x4C, 0x6C},
    {0x4D, 0x6D}, {0x4E, 0x6E}, {0x4F, 0x6F}, {0x50, 0x70}, {0x51, 0x71}, {0x52, 0x72},
    {0x53, 0x73}, {0x54, 0x74}, {0x55, 0x75}, {0x56, 0x76}, {0x57, 0x77}, {0x58, 0x78},
    {0x59, 0x79}, {0x5A, 0x7A}, {0xC0, 0xE0}, {0xC1, 0xE1}, {0xC2, 0xE2}, {0xC3, 0xE3},
    {0xC4, 0xE4}, {0xC5, 0xE5}, {0xC6, 0xE6}, {0xC7, 0xE7}, {0xC8, 0xE8}, {0xC9, 0xE9},
    {0xCA, 0xEA}, {0xCB, 0xEB}, {0xCC, 0xEC}, {0xCD, 0xED}, {0xCE, 0xEE}, {0xCF, 0xEF},
    {0xD0, 0xF0}, {0xD1, 0xF1}, {0xD2, 0xF2}, {0xD3, 0xF3}, {0xD4, 0xF4}, {0xD5, 0xF5},
    {0xD6, 0xF6}, {0xD8, 0xF8}, {0xD9, 0xF9}, {0xDA, 0xFA}, {0xDB, 0xFB}, {0xDC, 0xFC},
    {0xDD, 0xFD}, {0xDE, 0xFE}, {0x100, 0x101}, {0x102, 0x103}, {0x104, 0x105}, {0x106, 0x107},
    {0x108, 0x109}, {0x10A, 0x10B}, {0x10C, 0x10D}, {0x10E, 0x10F}, {0x110, 0x111}, {0x112, 0x113},
    {0x114, 0x115}, {0x116, 0x117}, {0x118, 0x119}, {0x11A, 0x11B}, {0x11C, 0x11D}, {0x11E, 0x11F},
    {0x120, 0x121}, {0x122, 0x123}, {0x124, 0x125}, {0x126, 0x127}, {0x128, 0x129}, {0x12A, 0x12B},
    {0x12C, 0x12D}, {0x12E, 0x12F}, {0x132, 0x133}, {0x134, 0x135}, {0x136, 0x137}, {0x139, 0x13A},
    {0x13B, 0x13C}, {0x13D, 0x13E}, {0x13F, 0x140}, {0x141, 0x142}, {0x143, 0x144}, {0x145, 0x146},
    {0x147, 0x148}, {0x14A, 0x14B}, {0x14C, 0x14D}, {0x14E, 0x14F}, {0x150, 0x151}, {0x152, 0x153},
    {0x154, 0x155}, {0x156, 0x157}, {0x158, 0x159}, {0x15A, 0x15B}, {0x15C, 0x15D}, {0x15E, 0x15F},
    {0x160, 0x161}, {0x162, 0x163}, {0x164, 0x165}, {0x166, 0x167}, {0x168, 0x169}, {0x16A, 0x16B},
    {0x16C, 0x16D}, {0x16E, 0x16F}, {0x170, 0x171}, {0x172, 0x173}, {0x174, 0x175}, {0x176, 0x177},
    {0x178, 0xFF}, {0x179, 0x17A}, {0x17B, 0x17C}, {0x17D, 0x17E}, {0x181, 0x253}, {0x182, 0x183},
    {0x184, 0x185}, {0x186, 0x254}, {0x187, 0x188}, {0x189, 0x256}, {0x18A, 0x257}, {0x18B, 0x18C},
    {0x18E, 0x1DD}, {0x18F, 0x259}, {0x190, 0x25B}, {0x191, 0x192}, {0x193, 0x260}, {0x194, 0x263},
    {0x196, 0x269}, {0x197, 0x268}, {0x198, 0x199}, {0x19C, 0x26F}, {0x19D, 0x272}, {0x19F, 0x275},
    {0x1A0, 0x1A1}, {0x1A2, 0x1A3}, {0x1A4, 0x1A5}, {0x1A6, 0x280}, {0x1A7, 0x1A8}, {0x1A9, 0x283},
    {0x1AC, 0x1AD}, {0x1AE, 0x288}, {0x1AF, 0x1B0}, {0x1B1, 0x28A}, {0x1B2, 0x28B}, {0x1B3, 0x1B4},
    {0x1B5, 0x1B6}, {0x1B7, 0x292}, {0x1B8, 0x1B9}, {0x1BC, 0x1BD}, {0x1C4, 0x1C6}, {0x1C5, 0x1C6},
    {0x1C7, 0x1C9}, {0x1C8, 0x1C9}, {0x1CA, 0x1CC}, {0x1CB, 0x1CC}, {0x1CD, 0x1CE}, {0x1CF, 0x1D0},
    {0x1D1, 0x1D2}, {0x1D3, 0x1D4}, {0x1D5, 0x1D6}, {0x1D7, 0x1D8}, {0x1D9, 0x1DA}, {0x1DB, 0x1DC},
    {0x1DE, 0x1DF}, {0x1E0, 0x1E1}, {0x1E2, 0x1E3}, {0x1E4, 0x1E5}, {0x1E6, 0x1E7}, {0x1E8, 0x1E9},
    {0x1EA, 0x1EB}, {0x1EC, 0x1ED}, {0x1EE, 0x1EF}, {0x1F1, 0x1F3}, {0x1F2, 0x1F3}, {0x1F4, 0x1F5},
    {0x1F6, 0x195}, {0x1F7, 0x1BF}, {0x1F8, 0x1F9}, {0x1FA, 0x1FB}, {0x1FC, 0x1FD}, {0x1FE, 0x1FF},
    {0x200, 0x201}, {0x202, 0x203}, {0x204, 0x205}, {0x206, 0x207}, {0x208, 0x209}, {0x20A, 0x20B},
    {0x20C, 0x20D}, {0x20E, 0x20F}, {0x210, 0x211}, {0x212, 0x213}, {0x214, 0x215}, {0x216, 0x217},
    {0x218, 0x219}, {0x21A, 0x21B}, {0x21C, 0x21D}, {0x21E, 0x21F}, {0x220, 0x19E}, {0x222, 0x223},
    {0x224, 0x225}, {0x226, 0x227}, {0x228, 0x229}, {0x22A, 0x22B}, {0x22C, 0x22D}, {0x22E, 0x22F},
    {0x230, 0x231}, {0x232, 0x233}, {0x23A, 0x2C65}, {0x23B, 0x23C}, {0x23D, 0x19A}, {0x23E, 0x2C66},
    {0x241, 0x242}, {0x243, 0x180}, {0x244, 0x289}, {0x245, 0x28C}, {0x246, 0x247}, {0x248, 0x249},
    {0x24A, 0x24B}, {0x24C, 0x24D}, {0x24E, 0x24F}, {0x370, 0x371}, {0x372, 0x373}, {0x376, 0x377},
    {0x37F, 0x3F3}, {0x386, 0x3AC}, {0x388, 0x3AD}, {0x389, 0x3AE}, {0x38A, 0x3AF}, {0x38C, 0x3CC},
    {0x38E, 0x3CD}, {0x38F, 0x3CE}, {0x391, 0x3B1}, {0x392, 0x3B2}, {0x393, 0x3B3}, {0x394, 0x3B4},
    {0x395, 0x3B5}, {0x396, 0x3B6}, {0x397, 0x3B7}, {0x398, 0x3B8}, {0x399, 0x3B9}, {0x39A, 0x3BA},
    {0x39B, 0x3BB}, {0x39C, 0x3BC}, {0x39D, 0x3BD}, {0x39E, 0x3BE}, {0x39F, 0x3BF}, {0x3A0, 0x3C0},
    {0x3A1, 0x3C1}, {0x3A3, 0x3C3}, {0x3A4, 0x3C4}, {0x3A5, 0x3C5}, {0x3A6, 0x3C6}, {0x3A7, 0x3C7},
    {0x3A8, 0x3C8}, {0x3A9, 0x3C9}, {0x3AA, 0x3CA}, {0x3AB, 0x3CB}, {0x3CF, 0x3D7}, {0x3D8, 0x3D9},
    {0x3DA, 0x3DB}, {0x3DC, 0x3DD}, {0x3DE, 0x3DF}, {0x3E0, 0x3E1}, {0x3E2, 0x3E3}, {0x3E4, 0x3E5},
    {0x3E6, 0x3E7}, {0x3E8, 0x3E9}, {0x3EA, 0x3EB}, {0x3EC, 0x3ED}, {0x3EE, 0x3EF}, {0x3F4, 0x3B8},
    {0x3F7, 0x3F8}, {0x3F9, 0x3F2}, {0x3FA, 0x3FB}, {0x3FD, 0x37B}, {0x3FE, 0x37C}, {0x3FF, 0x37D},
    {0x400, 0x450}, {0x401, 0x451}, {0x402, 0x452}, {0x403, 0x453}, {0x404, 0x454}, {0x405, 0x455},
    {0x406, 0x456}, {0x407, 0x457}, {0x408, 0x458}, {0x409, 0x459}, {0x40A, 0x45A}, {0x40B, 0x45B},
    {0x40C, 0x45C}, {0x40D, 0x45D}, {0x40E, 0x45E}, {0x40F, 0x45F}, {0x410, 0x430}, {0x411, 0x431},
    {0x412, 0x432}, {0x413, 0x433}, {0x414, 0x434}, {0x415, 0x435}, {0x416, 0x436}, {0x417, 0x437},
    {0x418, 0x438}, {0x419, 0x439}, {0x41A, 0x43A}, {0x41B, 0x43B}, {0x41C, 0x43C}, {0x41D, 0x43D},
    {0x41E, 0x43E}, {0x41F, 0x43F}, {0x420, 0x440}, {0x421, 0x441}, {0x422, 0x442}, {0x423, 0x443},
    {0x424, 0x444}, {0x425, 0x445}, {0x426, 0x446}, {0x427, 0x447}, {0x428, 0x448}, {0x429, 0x449},
    {0x42A, 0x44A}, {0x42B, 0x44B}, {0x42C, 0x44C}, {0x42D, 0x44D}, {0x42E, 0x44E}, {0x42F, 0x44F},
    {0x460, 0x461}, {0x462, 0x463}, {0x464, 0x465}, {0x466, 0x467}, {0x468, 0x469}, {0x46A, 0x46B},
    {0x46C, 0x46D}, {0x46E, 0x46F}, {0x470, 0x471}, {0x472, 0x473}, {0x474, 0x475}, {0x476, 0x477},
    {0x478, 0x479}, {0x47A, 0x47B}, {0x47C, 0x47D}, {0x47E, 0x47F}, {0x480, 0x481}, {0x48A, 0x48B},
    {0x48C, 0x48D}, {0x48E, 0x48F}, {0x490, 0x491}, {0x492, 0x493}, {0x494, 0x495}, {0x496, 0x497},
    {0x498, 0x499}, {0x49A, 0x49B}, {0x49C, 0x49D}, {0x49E, 0x49F}, {0x4A0, 0x4A1}, {0x4A2, 0x4A3},
    {0x4A4, 0x4A5}, {0x4A6, 0x4A7}, {0x4A8, 0x4A9}, {0x4AA, 0x4AB}, {0x4AC, 0x4AD}, {0x4AE, 0x4AF},
    {0x4B0, 0x4B1}, {0x4B2, 0x4B3}, {0x4B4, 0x4B5}, {0x4B6, 0x4B7}, {0x4B8, 0x4B9}, {0x4BA, 0x4BB},
    {0x4BC, 0x4BD}, {0x4BE, 0x4BF}, {0x4C0, 0x4CF}, {0x4C1, 0x4C2}, {0x4C3, 0x4C4}, {0x4C5, 0x4C6},
    {0x4C7, 0x4C8}, {0x4C9, 0x4CA}, {0x4CB, 0x4CC}, {0x4CD, 0x4CE}, {0x4D0, 0x4D1}, {0x4D2, 0x4D3},
    {0x4D4, 0x4D5}, {0x4D6, 0x4D7}, {0x4D8, 0x4D9}, {0x4DA, 0x4DB}, {0x4DC, 0x4DD}, {0x4DE, 0x4DF},
    {0x4E0, 0x4E1}, {0x4E2, 0x4E3}, {0x4E4, 0x4E5}, {0x4E6, 0x4E7}, {0x4E8, 0x4E9}, {0x4EA, 0x4EB},
    {0x4EC, 0x4ED}, {0x4EE, 0x4EF}, {0x4F0, 0x4F1}, {0x4F2, 0x4F3}, {0x4F4, 0x4F5}, {0x4F6, 0x4F7},
    {0x4F8, 0x4F9}, {0x4FA, 0x4FB}, {0x4FC, 0x4FD}, {0x4FE, 0x4FF}, {0x500, 0x501}, {0x502, 0x503},
    {0x504, 0x505}, {0x506, 0x507}, {0x508, 0x509}, {0x50A, 0x50B}, {0x50C, 0x50D}, {0x50E, 0x50F},
    {0x510, 0x511}, {0x512, 0x513}, {0x514, 0x515}, {0x516, 0x517}, {0x518, 0x519}, {0x51A, 0x51B},
    {0x51C, 0x51D}, {0x51E, 0x51F}, {0x520, 0x521}, {0x522, 0x523}, {0x524, 0x525}, {0x526, 0x527},
    {0x528, 0x529}, {0x52A, 0x52B}, {0x52C, 0x52D}, {0x52E, 0x52F}, {0x531, 0x561}, {0x532, 0x562},
    {0x533, 0x563}, {0x534, 0x564}, {0x535, 0x565}, {0x536, 0x566}, {0x537, 0x567}, {0x538, 0x568},
    {0x539, 0x569}, {0x53A, 0x56A}, {0x53B, 0x56B}, {0x53C, 0x56C}, {0x53D, 0x56D}, {0x53E, 0x56E},
    {0x53F, 0x56F}, {0x540, 0x570}, {0x541, 0x571}, {0x542, 0x572}, {0x543, 0x573}, {0x544, 0x574},
    {0x545, 0x575}, {0x546, 0x576}, {0x547, 0x577}, {0x548, 0x578}, {0x549, 0x579}, {0x54A, 0x57A},
    {0x54B, 0x57B}, {0x54C, 0x57C}, {0x54D, 0x57D}, {0x54E, 0x57E}, {0x54F, 0x57F}, {0x550, 0x580},
    {0x551, 0x581}, {0x552, 0x582}, {0x553, 0x583}, {0x554, 0x584}, {0x555, 0x585}, {0x556, 0x586},
    {0x10A0, 0x2D00}, {0x10A1, 0x2D01}, {0x10A2, 0x2D02}, {0x10A3, 0x2D03}, {0x10A4, 0x2D04}, {0x10A5, 0x2D05},
    {0x10A6, 0x2D06}, {0x10A7, 0x2D07}, {0x10A8, 0x2D08}, {0x10A9, 0x2D09}, {0x10AA, 0x2D0A}, {0x10AB, 0x2D0B},
    {0x10AC, 0x2D0C}, {0x10AD, 0x2D0D}, {0x10AE, 0x2D0E}, {0x10AF, 0x2D0F}, {0x10B0, 0x2D10}, {0x10B1, 0x2D11},
    {0x10B2, 0x2D12}, {0x10B3, 0x2D13}, {0x10B4, 0x2D14}, {0x10B5, 0x2D15}, {0x10B6, 0x2D16}, {0x10B7, 0x2D17},
    {0x10B8, 0x2D18}, {0x10B9, 0x2D19}, {0x10BA, 0x2D1A}, {0x10BB, 0x2D1B}, {0x10BC, 0x2D1C}, {0x10BD, 0x2D1D},
    {0x10BE, 0x2D1E}, {0x10BF, 0x2D1F}, {0x10C0, 0x2D20}, {0x10C1, 0x2D21}, {0x10C2, 0x2D22}, {0x10C3, 0x2D23},
    {0x10C4, 0x2D24}, {0x10C5, 0x2D25}, {0x10C7, 0x2D27}, {0x10CD, 0x2D2D}, {0x13A0, 0xAB70}, {0x13A1, 0xAB71},
    {0x13A2, 0xAB72}, {0x13A3, 0xAB73}, {0x13A4, 0xAB74}, {0x13A5, 0xAB75}, {0x13A6, 0xAB76}, {0x13A7, 0xAB77},
    {0x13A8, 0xAB78}, {0x13A9, 0xAB79}, {0x13AA, 0xAB7A}, {0x13AB, 0xAB7B}, {0x13AC, 0xAB7C}, {0x13AD, 0xAB7D},
    {0x13AE, 0xAB7E}, {0x13AF, 0xAB7F}, {0x13B0, 0xAB80}, {0x13B1, 0xAB81}, {0x13B2, 0xAB82}, {0x13B3, 0xAB83},
    {0x13B4, 0xAB84}, {0x13B5, 0xAB85}, {0x13B6, 0xAB86}, {0x13B7, 0xAB87}, {0x13B8, 0xAB88}, {0x13B9, 0xAB89},
    {0x13BA, 0xAB8A}, {0x13BB, 0xAB8B}, {0x13BC, 0xAB8C}, {0x13BD, 0xAB8D}, {0x13BE, 0xAB8E}, {0x13BF, 0xAB8F},
    {0x13C0, 0xAB90}, {0x13C1, 0xAB91}, {0x13C2, 0xAB92}, {0x13C3, 0xAB93}, {0x13C4, 0xAB94}, {0x13C5, 0xAB95},
    {0x13C6, 0xAB96}, {0x13C7, 0xAB97}, {0x13C8, 0xAB98}, {0x13C9, 0xAB99}, {0x13CA, 0xAB9A}, {0x13CB, 0xAB9B},
    {0x13CC, 0xAB9C}, {0x13CD, 0xAB9D}, {0x13CE, 0xAB9E}, {0x13CF, 0xAB9F}, {0x13D0, 0xABA0}, {0x13D1, 0xABA1},
    {0x13D2, 0xABA2}, {0x13D3, 0xABA3}, {0x13D4, 0xABA4}, {0x13D5, 0xABA5}, {0x13D6, 0xABA6}, {0x13D7, 0xABA7},
    {0x13D8, 0xABA8}, {0x13D9, 0xABA9}, {0x13DA, 0xABAA}, {0x13DB, 0xABAB}, {0x13DC, 0xABAC}, {0x13DD, 0xABAD},
    {0x13DE, 0xABAE}, {0x13DF, 0xABAF}, {0x13E0, 0xABB0}, {0x13E1, 0xABB1}, {0x13E2, 0xABB2}, {0x13E3, 0xABB3},
    {0x13E4, 0xABB4}, {0x13E5, 0xABB5}, {0x13E6, 0xABB6}, {0x13E7, 0xABB7}, {0x13E8, 0xABB8}, {0x13E9, 0xABB9},
    {0x13EA, 0xABBA}, {0x13EB, 0xABBB}, {0x13EC, 0xABBC}, {0x13ED, 0xABBD}, {0x13EE, 0xABBE}, {0x13EF, 0xABBF},
    {0x13F0, 0x13F8}, {0x13F1, 0x13F9}, {0x13F2, 0x13FA}, {0x13F3, 0x13FB}, {0x13F4, 0x13FC}, {0x13F5, 0x13FD},
    {0x1C90, 0x10D0}, {0x1C91, 0x10D1}, {0x1C92, 0x10D2}, {0x1C93, 0x10D3}, {0x1C94, 0x10D4}, {0x1C95, 0x10D5},
    {0x1C96, 0x10D6}, {0x1C97, 0x10D7}, {0x1C98, 0x10D8}, {0x1C99, 0x10D9}, {0x1C9A, 0x10DA}, {0x1C9B, 0x10DB},
    {0x1C9C, 0x10DC}, {0x1C9D, 0x10DD}, {0x1C9E, 0x10DE}, {0x1C9F, 0x10DF}, {0x1CA0, 0x10E0}, {0x1CA1, 0x10E1},
    {0x1CA2, 0x10E2}, {0x1CA3, 0x10E3}, {0x1CA4, 0x10E4}, {0x1CA5, 0x10E5}, {0x1CA6, 0x10E6}, {0x1CA7, 0x10E7},
    {0x1CA8, 0x10E8}, {0x1CA9, 0x10E9}, {0x1CAA, 0x10EA}, {0x1CAB, 0x10EB}, {0x1CAC, 0x10EC}, {0x1CAD, 0x10ED},
    {0x1CAE, 0x10EE}, {0x1CAF, 0x10EF}, {0x1CB0, 0x10F0}, {0x1CB1, 0x10F1}, {0x1CB2, 0x10F2}, {0x1CB3, 0x10F3},
    {0x1CB4, 0x10F4}, {0x1CB5, 0x10F5}, {0x1CB6, 0x10F6}, {0x1CB7, 0x10F7}, {0x1CB8, 0x10F8}, {0x1CB9, 0x10F9},
    {0x1CBA, 0x10FA}, {0x1CBD, 0x10FD}, {0x1CBE, 0x10FE}, {0x1CBF, 0x10FF}, {0x1E00, 0x1E01}, {0x1E02, 0x1E03},
    {0x1E04, 0x1E05}, {0x1E06, 0x1E07}, {0x1E08, 0x1E09}, {0x1E0A, 0x1E0B}, {0x1E0C, 0x1E0D}, {0x1E0E, 0x1E0F},
    {0x1E10, 0x1E11}, {0x1E12, 0x1E13}, {0x1E14, 0x1E15}, {0x1E16, 0x1E17}, {0x1E18, 0x1E19}, {0x1E1A, 0x1E1B},
    {0x1E1C, 0x1E1D}, {0x1E1E, 0x1E1F}, {0x1E20, 0x1E21}, {0x1E22, 0x1E23}, {0x1E24, 0x1E25}, {0x1E26, 0x1E27},
    {0x1E28, 0x1E29}, {0x1E2A, 0x1E2B}, {0x1E2C, 0x1E2D}, {0x1E2E, 0x1E2F}, {0x1E30, 0x1E31}, {0x1E32, 0x1E33},
    {0x1E34, 0x1E35}, {0x1E36, 0x1E37}, {0x1E38, 0x1E39}, {0x1E3A, 0x1E3B}, {0x1E3C, 0x1E3D}, {0x1E3E, 0x1E3F},
    {0x1E40, 0x1E41}, {0x1E42, 0x1E43}, {0x1E44, 0x1E45}, {0x1E46, 0x1E47}, {0x1E48, 0x1E49}, {0x1E4A, 0x1E4B},
    {0x1E4C, 0x1E4D}, {0x1E4E, 0x1E4F}, {0x1E50, 0x1E51}, {0x1E52, 0x1E53}, {0x1E54, 0x1E55}, {0x1E56, 0x1E57},
    {0x1E58, 0x1E59}, {0x1E5A, 0x1E5B}, {0x1E5C, 0x1E5D}, {0x1E5E, 0x1E5F}, {0x1E60, 0x1E61}, {0x1E62, 0x1E63},
    {0x1E64, 0x1E65}, {0x1E66, 0x1E67}, {0x1E68, 0x1E69}, {0x1E6A, 0x1E6B}, {0x1E6C, 0x1E6D}, {0x1E6E, 0x1E6F},
    {0x1E70, 0x1E71}, {0x1E72, 0x1E73}, {0x1E74, 0x1E75}, {0x1E76, 0x1E77}, {0x1E78, 0x1E79}, {0x1E7A, 0x1E7B},
    {0x1E7C, 0x1E7D}, {0x1E7E, 0x1E7F}, {0x1E80, 0x1E81}, {0x1E82, 0x1E83}, {0x1E84, 0x1E85}, {0x1E86, 0x1E87},
    {0x1E88, 0x1E89}, {0x1E8A, 0x1E8B}, {0x1E8C, 0x1E8D}, {0x1E8E, 0x1E8F}, {0x1E90, 0x1E91}, {0x1E92, 0x1E93},
    {0x1E94, 0x1E95}, {0x1E9E, 0xDF}, {0x1EA0, 0x1EA1}, {0x1EA2, 0x1EA3}, {0x1EA4, 0x1EA5}, {0x1EA6, 0x1EA7},
    {0x1EA8, 0x1EA9}, {0x1EAA, 0x1EAB}, {0x1EAC, 0x1EAD}, {0x1EAE, 0x1EAF}, {0x1EB0, 0x1EB1}, {0x1EB2, 0x1EB3},
    {0x1EB4, 0x1EB5}, {0x1EB6, 0x1EB7}, {0x1EB8, 0x1EB9}, {0x1EBA, 0x1EBB}, {0x1EBC, 0x1EBD}, {0x1EBE, 0x1EBF},
    {0x1EC0, 0x1EC1}, {0x1EC2, 0x1EC3}, {0x1EC4, 0x1EC5}, {0x1EC6, 0x1EC7}, {0x1EC8, 0x1EC9}, {0x1ECA, 0x1ECB},
    {0x1ECC, 0x1ECD}, {0x1ECE, 0x1ECF}, {0x1ED0, 0x1ED1}, {0x1ED2, 0x1ED3}, {0x1ED4, 0x1ED5}, {0x1ED6, 0x1ED7},
    {0x1ED8, 0x1ED9}, {0x1EDA, 0x1EDB}, {0x1EDC, 0x1EDD}, {0x1EDE, 0x1EDF}, {0x1EE0, 0x1EE1}, {0x1EE2, 0x1EE3},
    {0x1EE4, 0x1EE5}, {0x1EE6, 0x1EE7}, {0x1EE8, 0x1EE9}, {0x1EEA, 0x1EEB}, {0x1EEC, 0x1EED}, {0x1EEE, 0x1EEF},
    {0x1EF0, 0x1EF1}, {0x1EF2, 0x1EF3}, {0x1EF4, 0x1EF5}, {0x1EF6, 0x1EF7}, {0x1EF8, 0x1EF9}, {0x1EFA, 0x1EFB},
    {0x1EFC, 0x1EFD}, {0x1EFE, 0x1EFF}, {0x1F08, 0x1F00}, {0x1F09, 0x1F01}, {0x1F0A, 0x1F02}, {0x1F0B, 0x1F03},
    {0x1F0C, 0x1F04}, {0x1F0D, 0x1F05}, {0x1F0E, 0x1F06}, {0x1F0F, 0x1F07}, {0x1F18, 0x1F10}, {0x1F19, 0x1F11},
    {0x1F1A, 0x1F12}, {0x1F1B, 0x1F13}, {0x1F1C, 0x1F14}, {0x1F1D, 0x1F15}, {0x1F28, 0x1F20}, {0x1F29, 0x1F21},
    {0x1F2A, 0x1F22}, {0x1F2B, 0x1F23}, {0x1F2C, 0x1F24}, {0x1F2D, 0x1F25}, {0x1F2E, 0x1F26}, {0x1F2F, 0x1F27},
    {0x1F38, 0x1F30}, {0x1F39, 0x1F31}, {0x1F3A, 0x1F32}, {0x1F3B, 0x1F33}, {0x1F3C, 0x1F34}, {0x1F3D, 0x1F35},
    {0x1F3E, 0x1F36}, {0x1F3F, 0x1F37}, {0x1F48, 0x1F40}, {0x1F49, 0x1F41}, {0x1F4A, 0x1F42}, {0x1F4B, 0x1F43},
    {0x1F4C, 0x1F44}, {0x1F4D, 0x1F45}, {0x1F59, 0x1F51}, {0x1F5B, 0x1F53}, {0x1F5D, 0x1F55}, {0x1F5F, 0x1F57},
    {0x1F68, 0x1F60}, {0x1F69, 0x1F61}, {0x1F6A, 0x1F62}, {0x1F6B, 0x1F63}, {0x1F6C, 0x1F64}, {0x1F6D, 0x1F65},
    {0x1F6E, 0x1F66}, {0x1F6F, 0x1F67}, {0x1F88, 0x1F80}, {0x1F89, 0x1F81}, {0x1F8A, 0x1F82}, {0x1F8B, 0x1F83},
    {0x1F8C, 0x1F84}, {0x1F8D, 0x1F85}, {0x1F8E, 0x1F86}, {0x1F8F, 0x1F87}, {0x1F98, 0x1F90}, {0x1F99, 0x1F91},
    {0x1F9A, 0x1F92}, {0x1F9B, 0x1F93}, {0x1F9C, 0x1F94}, {0x1F9D, 0x1F95}, {0x1F9E, 0x1F96}, {0x1F9F, 0x1F97},
    {0x1FA8, 0x1FA0}, {0x1FA9, 0x1FA1}, {0x1FAA, 0x1FA2}, {0x1FAB, 0x1FA3}, {0x1FAC, 0x1FA4}, {0x1FAD, 0x1FA5},
    {0x1FAE, 0x1FA6}, {0x1FAF, 0x1FA7}, {0x1FB8, 0x1FB0}, {0x1FB9, 0x1FB1}, {0x1FBA, 0x1F70}, {0x1FBB, 0x1F71},
    {0x1FBC, 0x1FB3}, {0x1FC8, 0x1F72}, {0x1FC9, 0x1F73}, {0x1FCA, 0x1F74}, {0x1FCB, 0x1F75}, {0x1FCC, 0x1FC3},
    {0x1FD8, 0x1FD0}, {0x1FD9, 0x1FD1}, {0x1FDA, 0x1F76}, {0x1FDB, 0x1F77}, {0x1FE8, 0x1FE0}, {0x1FE9, 0x1FE1},
    {0x1FEA, 0x1F7A}, {0x1FEB, 0x1F7B}, {0x1FEC, 0x1FE5}, {0x1FF8, 0x1F78}, {0x1FF9, 0x1F79}, {0x1FFA, 0x1F7C},
    {0x1FFB, 0x1F7D}, {0x1FFC, 0x1FF3}, {0x2126, 0x3C9}, {0x212A, 0x6B}, {0x212B, 0xE5}, {0x2132, 0x214E},
    {0x2160, 0x2170}, {0x2161, 0x2171}, {0x2162, 0x2172}, {0x2163, 0x2173}, {0x2164, 0x2174}, {0x2165, 0x2175},
    {0x2166, 0x2176}, {0x2167, 0x2177}, {0x2168, 0x2178}, {0x2169, 0x2179}, {0x216A, 0x217A}, {0x216B, 0x217B},
    {0x216C, 0x217C}, {0x216D, 0x217D}, {0x216E, 0x217E}, {0x216F, 0x217F}, {0x2183, 0x2184}, {0x24B6, 0x24D0},
    {0x24B7, 0x24D1}, {0x24B8, 0x24D2}, {0x24B9, 0x24D3}, {0x24BA, 0x24D4}, {0x24BB, 0x24D5}, {0x24BC, 0x24D6},
    {0x24BD, 0x24D7}, {0x24BE, 0x24D8}, {0x24BF, 0x24D9}, {0x24C0, 0x24DA}, {0x24C1, 0x24DB}, {0x24C2, 0x24DC},
    {0x24C3, 0x24DD}, {0x24C4, 0x24DE}, {0x24C5, 0x24DF}, {0x24C6, 0x24E0}, {0x24C7, 0x24E1}, {0x24C8, 0x24E2},
    {0x24C9, 0x24E3}, {0x24CA, 0x24E4}, {0x24CB, 0x24E5}, {0x24CC, 0x24E6}, {0x24CD, 0x24E7}, {0x24CE, 0x24E8},
    {0x24CF, 0x24E9}, {0x2C00, 0x2C30}, {0x2C01, 0x2C31}, {0x2C02, 0x2C32}, {0x2C03, 0x2C33}, {0x2C04, 0x2C34},
    {0x2C05, 0x2C35}, {0x2C06, 0x2C36}, {0x2C07, 0x2C37}, {0x2C08, 0x2C38}, {0x2C09, 0x2C39}, {0x2C0A, 0x2C3A},
    {0x2C0B, 0x2C3B}, {0x2C0C, 0x2C3C}, {0x2C0D, 0x2C3D}, {0x2C0E, 0x2C3E}, {0x2C0F, 0x2C3F}, {0x2C10, 0x2C40},
    {0x2C11, 0x2C41}, {0x2C12, 0x2C42}, {0x2C13, 0x2C43}, {0x2C14, 0x2C44}, {0x2C15, 0x2C45}, {0x2C16, 0x2C46},
    {0x2C17, 0x2C47}, {0x2C18, 0x2C48}, {0x2C19, 0x2C49}, {0x2C1A, 0x2C4A}, {0x2C1B, 0x2C4B}, {0x2C1C, 0x2C4C},
    {0x2C1D, 0x2C4D}, {0x2C1E, 0x2C4E}, {0x2C1F, 0x2C4F}, {0x2C20, 0x2C50}, {0x2C21, 0x2C51}, {0x2C22, 0x2C52},
    {0x2C23, 0x2C53}, {0x2C24, 0x2C54}, {0x2C25, 0x2C55}, {0x2C26, 0x2C56}, {0x2C27, 0x2C57}, {0x2C28, 0x2C58},
    {0x2C29, 0x2C59}, {0x2C2A, 0x2C5A}, {0x2C2B, 0x2C5B}, {0x2C2C, 0x2C5C}, {0x2C2D, 0x2C5D}, {0x2C2E, 0x2C5E},
    {0x2C60, 0x2C61}, {0x2C62, 0x26B}, {0x2C63, 0x1D7D}, {0x2C64, 0x27D}, {0x2C67, 0x2C68}, {0x2C69, 0x2C6A},
    {0x2C6B, 0x2C6C}, {0x2C6D, 0x251}, {0x2C6E, 0x271}, {0x2C6F, 0x250}, {0x2C70, 0x252}, {0x2C72, 0x2C73},
    {0x2C75, 0x2C76}, {0x2C7E, 0x23F}, {0x2C7F, 0x240}, {0x2C80, 0x2C81}, {0x2C82, 0x2C83}, {0x2C84, 0x2C85},
    {0x2C86, 0x2C87}, {0x2C88, 0x2C89}, {0x2C8A, 0x2C8B}, {0x2C8C, 0x2C8D}, {0x2C8E, 0x2C8F}, {0x2C90, 0x2C91},
    {0x2C92, 0x2C93}, {0x2C94, 0x2C95}, {0x2C96, 0x2C97}, {0x2C98, 0x2C99}, {0x2C9A, 0x2C9B}, {0x2C9C, 0x2C9D},
    {0x2C9E, 0x2C9F}, {0x2CA0, 0x2CA1}, {0x2CA2, 0x2CA3}, {0x2CA4, 0x2CA5}, {0x2CA6, 0x2CA7}, {0x2CA8, 0x2CA9},
    {0x2CAA, 0x2CAB}, {0x2CAC, 0x2CAD}, {0x2CAE, 0x2CAF}, {0x2CB0, 0x2CB1}, {0x2CB2, 0x2CB3}, {0x2CB4, 0x2CB5},
    {0x2CB6, 0x2CB7}, {0x2CB8, 0x2CB9}, {0x2CBA, 0x2CBB}, {0x2CBC, 0x2CBD}, {0x2CBE, 0x2CBF}, {0x2CC0, 0x2CC1},
    {0x2CC2, 0x2CC3}, {0x2CC4, 0x2CC5}, {0x2CC6, 0x2CC7}, {0x2CC8, 0x2CC9}, {0x2CCA, 0x2CCB}, {0x2CCC, 0x2CCD},
    {0x2CCE, 0x2CCF}, {0x2CD0, 0x2CD1}, {0x2CD2, 0x2CD3}, {0x2CD4, 0x2CD5}, {0x2CD6, 0x2CD7}, {0x2CD8, 0x2CD9},
    {0x2CDA, 0x2CDB}, {0x2CDC, 0x2CDD}, {0x2CDE, 0x2CDF}, {0x2CE0, 0x2CE1}, {0x2CE2, 0x2CE3}, {0x2CEB, 0x2CEC},
    {0x2CED, 0x2CEE}, {0x2CF2, 0x2CF3}, {0xA640, 0xA641}, {0xA642, 0xA643}, {0xA644, 0xA645}, {0xA646, 0xA647},
    {0xA648, 0xA649}, {0xA64A, 0xA64B}, {0xA64C, 0xA64D}, {0xA64E, 0xA64F}, {0xA650, 0xA651}, {0xA652, 0xA653},
    {0xA654, 0xA655}, {0xA656, 0xA657}, {0xA658, 0xA659}, {0xA65A, 0xA65B}, {0xA65C, 0xA65D}, {0xA65E, 0xA65F},
    {0xA660, 0xA661}, {0xA662, 0xA663}, {0xA664, 0xA665}, {0xA666, 0xA667}, {0xA668, 0xA669}, {0xA66A, 0xA66B},
    {0xA66C, 0xA66D}, {0xA680, 0xA681}, {0xA682, 0xA683}, {0xA684, 0xA685}, {0xA686, 0xA687}, {0xA688, 0xA689},
    {0xA68A, 0xA68B}, {0xA68C, 0xA68D}, {0xA68E, 0xA68F}, {0xA690, 0xA691}, {0xA692, 0xA693}, {0xA694, 0xA695},
    {0xA696, 0xA697}, {0xA698, 0xA699}, {0xA69A, 0xA69B}, {0xA722, 0xA723}, {0xA724, 0xA725}, {0xA726, 0xA727},
    {0xA728, 0xA729}, {0xA72A, 0xA72B}, {0xA72C, 0xA72D}, {0xA72E, 0xA72F}, {0xA732, 0xA733}, {0xA734, 0xA735},
    {0xA736, 0xA737}, {0xA738, 0xA739}, {0xA73A, 0xA73B}, {0xA73C, 0xA73D}, {0xA73E, 0xA73F}, {0xA740, 0xA741},
    {0xA742, 0xA743}, {0xA744, 0xA745}, {0xA746, 0xA747}, {0xA748, 0xA749}, {0xA74A, 0xA74B}, {0xA74C, 0xA74D},
    {0xA74E, 0xA74F}, {0xA750, 0xA751}, {0xA752, 0xA753}, {0xA754, 0xA755}, {0xA756, 0xA757}, {0xA758, 0xA759},
    {0xA75A, 0xA75B}, {0xA75C, 0xA75D}, {0xA75E, 0xA75F}, {0xA760, 0xA761}, {0xA762, 0xA763}, {0xA764, 0xA765},
    {0xA766, 0xA767}, {0xA768, 0xA769}, {0xA76A, 0xA76B}, {0xA76C, 0xA76D}, {0xA76E, 0xA76F}, {0xA779, 0xA77A},
    {0xA77B, 0xA77C}, {0xA77D, 0x1D79}, {0xA77E, 0xA77F}, {0xA780, 0xA781}, {0xA782, 0xA783}, {0xA784, 0xA785},
    {0xA786, 0xA787}, {0xA78B, 0xA78C}, {0xA78D, 0x265}, {0xA790, 0xA791}, {0xA792, 0xA793}, {0xA796, 0xA797},
    {0xA798, 0xA799}, {0xA79A, 0xA79B}, {0xA79C, 0xA79D}, {0xA79E, 0xA79F}, {0xA7A0, 0xA7A1}, {0xA7A2, 0xA7A3},
    {0xA7A4, 0xA7A5}, {0xA7A6, 0xA7A7}, {0xA7A8, 0xA7A9}, {0xA7AA, 0x266}, {0xA7AB, 0x25C}, {0xA7AC, 0x261},
    {0xA7AD, 0x26C}, {0xA7AE, 0x26A}, {0xA7B0, 0x29E}, {0xA7B1, 0x287}, {0xA7B2, 0x29D}, {0xA7B3, 0xAB53},
    {0xA7B4, 0xA7B5}, {0xA7B6, 0xA7B7}, {0xA7B8, 0xA7B9}, {0xA7BA, 0xA7BB}, {0xA7BC, 0xA7BD}, {0xA7BE, 0xA7BF},
    {0xA7C2, 0xA7C3}, {0xA7C4, 0xA794}, {0xA7C5, 0x282}, {0xA7C6, 0x1D8E}, {0xA7C7, 0xA7C8}, {0xA7C9, 0xA7CA},
    {0xA7F5, 0xA7F6}, {0xFF21, 0xFF41}, {0xFF22, 0xFF42}, {0xFF23, 0xFF43}, {0xFF24, 0xFF44}, {0xFF25, 0xFF45},
    {0xFF26, 0xFF46}, {0xFF27, 0xFF47}, {0xFF28, 0xFF48}, {0xFF29, 0xFF49}, {0xFF2A, 0xFF4A}, {0xFF2B, 0xFF4B},
    {0xFF2C, 0xFF4C}, {0xFF2D, 0xFF4D}, {0xFF2E, 0xFF4E}, {0xFF2F, 0xFF4F}, {0xFF30, 0xFF50}, {0xFF31, 0xFF51},
    {0xFF32, 0xFF52}, {0xFF33, 0xFF53}, {0xFF34, 0xFF54}, {0xFF35, 0xFF55}, {0xFF36, 0xFF56}, {0xFF37, 0xFF57},
    {0xFF38, 0xFF58}, {0xFF39, 0xFF59}, {0xFF3A, 0xFF5A}, {0x10400, 0x10428}, {0x10401, 0x10429}, {0x10402, 0x1042A},
    {0x10403, 0x1042B}, {0x10404, 0x1042C}, {0x10405, 0x1042D}, {0x10406, 0x1042E}, {0x10407, 0x1042F}, {0x10408, 0x10430},
    {0x10409, 0x10431}, {0x1040A, 0x10432}, {0x1040B, 0x10433}, {0x1040C, 0x10434}, {0x1040D, 0x10435}, {0x1040E, 0x10436},
    {0x1040F, 0x10437}, {0x10410, 0x10438}, {0x10411, 0x10439}, {0x10412, 0x1043A}, {0x10413, 0x1043B}, {0x10414, 0x1043C},
    {0x10415, 0x1043D}, {0x10416, 0x1043E}, {0x10417, 0x1043F}, {0x10418, 0x10440}, {0x10419, 0x10441}, {0x1041A, 0x10442},
    {0x1041B, 0x10443}, {0x1041C, 0x10444}, {0x1041D, 0x10445}, {0x1041E, 0x10446}, {0x1041F, 0x10447}, {0x10420, 0x10448},
    {0x10421, 0x10449}, {0x10422, 0x1044A}, {0x10423, 0x1044B}, {0x10424, 0x1044C}, {0x10425, 0x1044D}, {0x10426, 0x1044E},
    {0x10427, 0x1044F}, {0x104B0, 0x104D8}, {0x104B1, 0x104D9}, {0x104B2, 0x104DA}, {0x104B3, 0x104DB}, {0x104B4, 0x104DC},
    {0x104B5, 0x104DD}, {0x104B6, 0x104DE}, {0x104B7, 0x104DF}, {0x104B8, 0x104E0}, {0x104B9, 0x104E1}, {0x104BA, 0x104E2},
    {0x104BB, 0x104E3}, {0x104BC, 0x104E4}, {0x104BD, 0x104E5}, {0x104BE, 0x104E6}, {0x104BF, 0x104E7}, {0x104C0, 0x104E8},
    {0x104C1, 0x104E9}, {0x104C2, 0x104EA}, {0x104C3, 0x104EB}, {0x104C4, 0x104EC}, {0x104C5, 0x104ED}, {0x104C6, 0x104EE},
    {0x104C7, 0x104EF}, {0x104C8, 0x104F0}, {0x104C9, 0x104F1}, {0x104CA, 0x104F2}, {0x104CB, 0x104F3}, {0x104CC, 0x104F4},
    {0x104CD, 0x104F5}, {0x104CE, 0x104F6}, {0x104CF, 0x104F7}, {0x104D0, 0x104F8}, {0x104D1, 0x104F9}, {0x104D2, 0x104FA},
    {0x104D3, 0x104FB}, {0x10C80, 0x10CC0}, {0x10C81, 0x10CC1}, {0x10C82, 0x10CC2}, {0x10C83, 0x10CC3}, {0x10C84, 0x10CC4},
    {0x10C85, 0x10CC5}, {0x10C86, 0x10CC6}, {0x10C87, 0x10CC7}, {0x10C88, 0x10CC8}, {0x10C89, 0x10CC9}, {0x10C8A, 0x10CCA},
    {0x10C8B, 0x10CCB}, {0x10C8C, 0x10CCC}, {0x10C8D, 0x10CCD}, {0x10C8E, 0x10CCE}, {0x10C8F, 0x10CCF}, {0x10C90, 0x10CD0},
    {0x10C91, 0x10CD1}, {0x10C92, 0x10CD2}, {0x10C93, 0x10CD3}, {0x10C94, 0x10CD4}, {0x10C95, 0x10CD5}, {0x10C96, 0x10CD6},
    {0x10C97, 0x10CD7}, {0x10C98, 0x10CD8}, {0x10C99, 0x10CD9}, {0x10C9A, 0x10CDA}, {0x10C9B, 0x10CDB}, {0x10C9C, 0x10CDC},
    {0x10C9D, 0x10CDD}, {0x10C9E, 0x10CDE}, {0x10C9F, 0x10CDF}, {0x10CA0, 0x10CE0}, {0x10CA1, 0x10CE1}, {0x10CA2, 0x10CE2},
    {0x10CA3, 0x10CE3}, {0x10CA4, 0x10CE4}, {0x10CA5, 0x10CE5}, {0x10CA6, 0x10CE6}, {0x10CA7, 0x10CE7}, {0x10CA8, 0x10CE8},
    {0x10CA9, 0x10CE9}, {0x10CAA, 0x10CEA}, {0x10CAB, 0x10CEB}, {0x10CAC, 0x10CEC}, {0x10CAD, 0x10CED}, {0x10CAE, 0x10CEE},
    {0x10CAF, 0x10CEF}, {0x10CB0, 0x10CF0}, {0x10CB1, 0x10CF1}, {0x10CB2, 0x10CF2}, {0x118A0, 0x118C0}, {0x118A1, 0x118C1},
    {0x118A2, 0x118C2}, {0x118A3, 0x118C3}, {0x118A4, 0x118C4}, {0x118A5, 0x118C5}, {0x118A6, 0x118C6}, {0x118A7, 0x118C7},
    {0x118A8, 0x118C8}, {0x118A9, 0x118C9}, {0x118AA, 0x118CA}, {0x118AB, 0x118CB}, {0x118AC, 0x118CC}, {0x118AD, 0x118CD},
    {0x118AE, 0x118CE}, {0x118AF, 0x118CF}, {0x118B0, 0x118D0}, {0x118B1, 0x118D1}, {0x118B2, 0x118D2}, {0x118B3, 0x118D3},
    {0x118B4, 0x118D4}, {0x118B5, 0x118D5}, {0x118B6, 0x118D6}, {0x118B7, 0x118D7}, {0x118B8, 0x118D8}, {0x118B9, 0x118D9},
    {0x118BA, 0x118DA}, {0x118BB, 0x118DB}, {0x118BC, 0x118DC}, {0x118BD, 0x118DD}, {0x118BE, 0x118DE}, {0x118BF, 0x118DF},
    {0x16E40, 0x16E60}, {0x16E41, 0x16E61}, {0x16E42, 0x16E62}, {0x16E43, 0x16E63}, {0x16E44, 0x16E64}, {0x16E45, 0x16E65},
    {0x16E46, 0x16E66}, {0x16E47, 0x16E67}, {0x16E48, 0x16E68}, {0x16E49, 0x16E69}, {0x16E4A, 0x16E6A}, {0x16E4B, 0x16E6B},
    {0x16E4C, 0x16E6C}, {0x16E4D, 0x16E6D}, {0x16E4E, 0x16E6E}, {0x16E4F, 0x16E6F}, {0x16E50, 0x16E70}, {0x16E51, 0x16E71},
    {0x16E52, 0x16E72}, {0x16E53, 0x16E73}, {0x16E54, 0x16E74}, {0x16E55, 0x16E75}, {0x16E56, 0x16E76}, {0x16E57, 0x16E77},
    {0x16E58, 0x16E78}, {0x16E59, 0x16E79}, {0x16E5A, 0x16E7A}, {0x16E5B, 0x16E7B}, {0x16E5C, 0x16E7C}, {0x16E5D, 0x16E7D},
    {0x16E5E, 0x16E7E}, {0x16E5F, 0x16E7F}, {0x1E900, 0x1E922}, {0x1E901, 0x1E923}, {0x1E902, 0x1E924}, {0x1E903, 0x1E925},
    {0x1E904, 0x1E926}, {0x1E905, 0x1E927}, {0x1E906, 0x1E928}, {0x1E907, 0x1E929}, {0x1E908, 0x1E92A}, {0x1E909, 0x1E92B},
    {0x1E90A, 0x1E92C}, {0x1E90B, 0x1E92D}, {0x1E90C, 0x1E92E}, {0x1E90D, 0x1E92F}, {0x1E90E, 0x1E930}, {0x1E90F, 0x1E931},
    {0x1E910, 0x1E932}, {0x1E911, 0x1E933}, {0x1E912, 0x1E934}, {0x1E913, 0x1E935}, {0x1E914, 0x1E936}, {0x1E915, 0x1E937},
    {0x1E916, 0x1E938}, {0x1E917, 0x1E939}, {0x1E918, 0x1E93A}, {0x1E919, 0x1E93B}, {0x1E91A, 0x1E93C}, {0x1E91B, 0x1E93D},
    {0x1E91C, 0x1E93E}, {0x1E91D, 0x1E93F}, {0x1E91E, 0x1E940}, {0x1E91F, 0x1E941}, {0x1E920, 0x1E942}, {0x1E921, 0x1E943},
};

}  // namespace dcad::detail
