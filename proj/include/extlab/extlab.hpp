#pragma once

// Umbrella header. JSON I/O lives in extlab/io.hpp and needs nlohmann/json.

#include "extlab/arith.hpp"
#include "extlab/cochain.hpp"
#include "extlab/cohomology.hpp"
#include "extlab/deciders.hpp"
#include "extlab/error.hpp"
#include "extlab/extension.hpp"
#include "extlab/group.hpp"
#include "extlab/modlinalg.hpp"
#include "extlab/morphisms.hpp"
#include "extlab/presets.hpp"
#include "extlab/theorems.hpp"
