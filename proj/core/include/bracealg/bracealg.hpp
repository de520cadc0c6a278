#pragma once

#include "bracealg/arrangement.hpp"
#include "bracealg/brace.hpp"
#include "bracealg/errors.hpp"
#include "bracealg/graded_space.hpp"
#include "bracealg/homotopy.hpp"
#include "bracealg/multimap.hpp"
#include "bracealg/permutation.hpp"
#include "bracealg/rational.hpp"
#include "bracealg/symbrace.hpp"
#include "bracealg/verdict.hpp"
