#pragma once

#include "bhlab/combinatorics.hpp"
#include "bhlab/constants.hpp"
#include "bhlab/multi_index.hpp"
#include "bhlab/norms.hpp"
#include "bhlab/polynomial.hpp"
#include "bhlab/random.hpp"
#include "bhlab/serialize.hpp"
#include "bhlab/symmetric_form.hpp"
#include "bhlab/verify.hpp"
