#pragma once

// Umbrella header for the whole library.

#include "synmon/alphabet.hpp"
#include "synmon/closure.hpp"
#include "synmon/decompose.hpp"
#include "synmon/dfa.hpp"
#include "synmon/display.hpp"
#include "synmon/dot.hpp"
#include "synmon/downset.hpp"
#include "synmon/epset.hpp"
#include "synmon/errors.hpp"
#include "synmon/ineq.hpp"
#include "synmon/json_io.hpp"
#include "synmon/lang_ops.hpp"
#include "synmon/morphism.hpp"
#include "synmon/nfa.hpp"
#include "synmon/numsemigroup.hpp"
#include "synmon/omega_term.hpp"
#include "synmon/ordered_monoid.hpp"
#include "synmon/regex.hpp"
#include "synmon/stamp.hpp"
#include "synmon/syntactic.hpp"
