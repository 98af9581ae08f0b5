#pragma once

#include "rspin/errors.hpp"
#include "rspin/moduli.hpp"
#include "rspin/number_theory.hpp"
#include "rspin/orbifold.hpp"
#include "rspin/orbits.hpp"
#include "rspin/presentation.hpp"
#include "rspin/rational.hpp"
#include "rspin/roots.hpp"
#include "rspin/seifert.hpp"
#include "rspin/twist.hpp"
