#pragma once

#include "ace/curvature.hpp"
#include "ace/diffops.hpp"
#include "ace/energy.hpp"
#include "ace/field.hpp"
#include "ace/grad.hpp"
#include "ace/io.hpp"
#include "ace/metrics.hpp"
#include "ace/solver.hpp"
#include "ace/synth.hpp"
