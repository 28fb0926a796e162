#pragma once

// Umbrella header.

#include "minkconic/vec2.hpp"
#include "minkconic/error.hpp"
#include "minkconic/roots.hpp"
#include "minkconic/unit_ball.hpp"
#include "minkconic/loci.hpp"
#include "minkconic/trace.hpp"
#include "minkconic/sip.hpp"
#include "minkconic/verify.hpp"
#include "minkconic/io.hpp"
