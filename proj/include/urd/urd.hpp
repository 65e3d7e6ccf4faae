// urd.hpp — umbrella header.
#pragma once

#include "almost_factor.hpp"
#include "io.hpp"
#include "lift.hpp"
#include "params.hpp"
#include "star.hpp"
#include "star_arrays.hpp"
#include "verify.hpp"
