// Umbrella header.
#ifndef RINGLAB_RINGLAB_HPP
#define RINGLAB_RINGLAB_HPP

#include "ringlab/checks.hpp"
#include "ringlab/dsl.hpp"
#include "ringlab/finring.hpp"
#include "ringlab/fpring.hpp"
#include "ringlab/groebner.hpp"
#include "ringlab/linalg.hpp"
#include "ringlab/points.hpp"
#include "ringlab/poly.hpp"
#include "ringlab/products.hpp"
#include "ringlab/theory.hpp"

#endif
