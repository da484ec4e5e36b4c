#pragma once

#include "lts/cochain.hpp"
#include "lts/cohomology.hpp"
#include "lts/deformation.hpp"
#include "lts/error.hpp"
#include "lts/fixtures.hpp"
#include "lts/lie_triple_system.hpp"
#include "lts/linalg.hpp"
#include "lts/random.hpp"
#include "lts/report.hpp"
#include "lts/representation.hpp"
#include "lts/rota_baxter.hpp"
#include "lts/scalar.hpp"
