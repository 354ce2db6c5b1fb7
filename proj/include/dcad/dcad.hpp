#pragma once

#include "dcad/anomaly.hpp"
#include "dcad/corpus_io.hpp"
#include "dcad/features.hpp"
#include "dcad/lang_id.hpp"
#include "dcad/lexicons.hpp"
#include "dcad/ngram_lm.hpp"
#include "dcad/pipeline.hpp"
#include "dcad/stats.hpp"
#include "dcad/tokenize.hpp"
#include "dcad/unicode.hpp"
