#pragma once

#include "lahnet/bigint.hpp"
#include "lahnet/combinatorics.hpp"
#include "lahnet/errors.hpp"
#include "lahnet/exact_matrix.hpp"
#include "lahnet/lah.hpp"
#include "lahnet/lgv.hpp"
#include "lahnet/network.hpp"
#include "lahnet/polynomial.hpp"
#include "lahnet/serialize.hpp"
#include "lahnet/variation.hpp"
