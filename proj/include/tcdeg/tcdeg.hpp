#pragma once

#include "tcdeg/analytic.hpp"
#include "tcdeg/bounds.hpp"
#include "tcdeg/config.hpp"
#include "tcdeg/errors.hpp"
#include "tcdeg/fock_oracle.hpp"
#include "tcdeg/io.hpp"
#include "tcdeg/laguerre.hpp"
#include "tcdeg/log.hpp"
#include "tcdeg/model.hpp"
#include "tcdeg/neoclassical.hpp"
#include "tcdeg/oscillator.hpp"
#include "tcdeg/qubit.hpp"
#include "tcdeg/scenario.hpp"
#include "tcdeg/series.hpp"
