#pragma once

#include "kroots/characters.hpp"
#include "kroots/descent_set.hpp"
#include "kroots/partition.hpp"
#include "kroots/permutation.hpp"
#include "kroots/report.hpp"
#include "kroots/ribbon.hpp"
#include "kroots/roots.hpp"
#include "kroots/rsk.hpp"
#include "kroots/tableau.hpp"
