#pragma once

#include "hyperheat/diagnostics.hpp"
#include "hyperheat/duhamel.hpp"
#include "hyperheat/etd.hpp"
#include "hyperheat/nonlinearity.hpp"
#include "hyperheat/phi_functions.hpp"
#include "hyperheat/picard.hpp"
#include "hyperheat/solver_config.hpp"
