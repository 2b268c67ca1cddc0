#pragma once

// Umbrella header.

#include "majorize/config.hpp"
#include "majorize/dyadic.hpp"
#include "majorize/ideals.hpp"
#include "majorize/io.hpp"
#include "majorize/linalg.hpp"
#include "majorize/matrix_checks.hpp"
#include "majorize/orders.hpp"
#include "majorize/random.hpp"
#include "majorize/seq_core.hpp"
#include "majorize/spectral.hpp"
#include "majorize/suite.hpp"
