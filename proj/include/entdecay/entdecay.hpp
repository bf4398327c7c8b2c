#pragma once

// Umbrella header for the full library.

#include "entdecay/csv.hpp"
#include "entdecay/decay.hpp"
#include "entdecay/error.hpp"
#include "entdecay/linalg.hpp"
#include "entdecay/measures.hpp"
#include "entdecay/random.hpp"
#include "entdecay/states.hpp"
#include "entdecay/verify.hpp"
