#pragma once

#include "ogi/alphabet.hpp"
#include "ogi/closure.hpp"
#include "ogi/constructions.hpp"
#include "ogi/decision.hpp"
#include "ogi/error.hpp"
#include "ogi/io.hpp"
#include "ogi/lang_fragment.hpp"
#include "ogi/nfa.hpp"
#include "ogi/random.hpp"
#include "ogi/string_ops.hpp"
