#pragma once

#include "csl/rational.hpp"
#include "csl/qvector.hpp"
#include "csl/lp.hpp"
#include "csl/polytope.hpp"
#include "csl/perspective.hpp"
#include "csl/instance.hpp"
#include "csl/sampler.hpp"
#include "csl/laws.hpp"
#include "csl/wspace.hpp"
#include "csl/riesz.hpp"
#include "csl/json_io.hpp"
