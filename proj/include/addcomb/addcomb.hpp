#pragma once

// Umbrella header.

#include "cd_constants.hpp"
#include "constructions.hpp"
#include "davenport_transform.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "extended_nat.hpp"
#include "io.hpp"
#include "localization.hpp"
#include "semigroup.hpp"
#include "set_calculus.hpp"
#include "sweep.hpp"
#include "theorems.hpp"
