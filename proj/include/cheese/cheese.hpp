#pragma once

#include "cheese/browder.hpp"
#include "cheese/check.hpp"
#include "cheese/complex.hpp"
#include "cheese/errors.hpp"
#include "cheese/families.hpp"
#include "cheese/generators.hpp"
#include "cheese/geometry.hpp"
#include "cheese/io.hpp"
#include "cheese/poly.hpp"
#include "cheese/random.hpp"
#include "cheese/rational.hpp"
#include "cheese/real.hpp"
#include "cheese/svg.hpp"
#include "cheese/tails.hpp"
#include "cheese/verify.hpp"
