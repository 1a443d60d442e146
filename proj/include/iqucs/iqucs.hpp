#pragma once

// Umbrella header: the whole library.

#include "iqucs/baseline.hpp"
#include "iqucs/encoding.hpp"
#include "iqucs/experiment.hpp"
#include "iqucs/grover.hpp"
#include "iqucs/metrics.hpp"
#include "iqucs/random.hpp"
#include "iqucs/search.hpp"
#include "iqucs/statevector.hpp"
#include "iqucs/wordlist.hpp"
