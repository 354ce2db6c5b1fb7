#!/usr/bin/env python3
"""Regenerates include/dcad/unicode_tables.hpp from Python's unicodedata.

Coarse character classes (letter/mark/number/punctuation/symbol/separator)
drive tokenization and the default special-character set; the fold table is
the simple one-to-one lowercase mapping used before lexicon lookups.
"""
import sys
import unicodedata

CLASS_OF_CATEGORY = {
    "Lu": "Letter", "Ll": "Letter", "Lt": "Letter", "Lm": "Letter", "Lo": "Letter",
    "Mn": "Mark", "Mc": "Mark", "Me": "Mark",
    "Nd": "Number", "Nl": "Number", "No": "Number",
    "Pc": "Punct", "Pd": "Punct", "Ps": "Punct", "Pe": "Punct",
    "Pi": "Punct", "Pf": "Punct", "Po": "Punct",
    "Sm": "Symbol", "Sc": "Symbol", "Sk": "Symbol", "So": "Symbol",
    "Zs": "Separator", "Zl": "Separator", "Zp": "Separator",
}

MAX_CP = 0x110000
SURROGATES = range(0xD800, 0xE000)


def class_ranges():
    ranges = []
    cur_class = None
    cur_lo = None
    prev = None
    for cp in range(MAX_CP):
        if cp in SURROGATES:
            cls = "Other"
        else:
            cls = CLASS_OF_CATEGORY.get(unicodedata.category(chr(cp)), "Other")
        if cls != cur_class:
            if cur_class not in (None, "Other"):
                ranges.append((cur_lo, prev, cur_class))
            cur_class = cls
            cur_lo = cp
        prev = cp
    if cur_class != "Other":
        ranges.append((cur_lo, prev, cur_class))
    return ranges


def fold_pairs():
    pairs = []
    for cp in range(MAX_CP):
        if cp in SURROGATES:
            continue
        low = chr(cp).lower()
        if len(low) == 1 and low != chr(cp):
            pairs.append((cp, ord(low)))
    return pairs


def main(out_path):
    ranges = class_ranges()
    folds = fold_pairs()
    with open(out_path, "w", encoding="utf-8") as f:
        w = f.write
        w("// Generated by scripts/gen_unicode_tables.py "
          f"(Unicode {unicodedata.unidata_version}). Do not edit.\n")
        w("#pragma once\n\n")
        w("#include <cstddef>\n#include <cstdint>\n\n")
        w("namespace dcad::detail {\n\n")
        w("enum class CharClass : std::uint8_t {\n")
        w("  Other = 0, Letter, Mark, Number, Punct, Symbol, Separator\n};\n\n")
        w("struct ClassRange {\n  char32_t lo;\n  char32_t hi;\n  CharClass cls;\n};\n\n")
        w(f"inline constexpr std::size_t kClassRangeCount = {len(ranges)};\n")
        w("inline constexpr ClassRange kClassRanges[kClassRangeCount] = {\n")
        for i in range(0, len(ranges), 4):
            row = ranges[i:i + 4]
            w("    " + " ".join(
                f"{{0x{lo:X}, 0x{hi:X}, CharClass::{cls}}}," for lo, hi, cls in row) + "\n")
        w("};\n\n")
        w("struct FoldPair {\n  char32_t from;\n  char32_t to;\n};\n\n")
        w(f"inline constexpr std::size_t kSimpleFoldCount = {len(folds)};\n")
        w("inline constexpr FoldPair kSimpleFolds[kSimpleFoldCount] = {\n")
        for i in range(0, len(folds), 6):
            row = folds[i:i + 6]
            w("    " + " ".join(f"{{0x{a:X}, 0x{b:X}}}," for a, b in row) + "\n")
        w("};\n\n")
        w("}  // namespace dcad::detail\n")
    print(f"{out_path}: {len(ranges)} class ranges, {len(folds)} fold pairs")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/dcad/unicode_tables.hpp")
