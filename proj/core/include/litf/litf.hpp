#pragma once

#include "litf/bits.hpp"
#include "litf/boolean_domain.hpp"
#include "litf/classical_threshold.hpp"
#include "litf/closure_representability.hpp"
#include "litf/closure_system.hpp"
#include "litf/errors.hpp"
#include "litf/finite_lattice.hpp"
#include "litf/free_distributive_lattice.hpp"
#include "litf/io.hpp"
#include "litf/lattice_valued.hpp"
#include "litf/threshold.hpp"
