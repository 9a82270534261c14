#pragma once

#include "knotx/bracket.hpp"
#include "knotx/diagram.hpp"
#include "knotx/harness.hpp"
#include "knotx/knotdb.hpp"
#include "knotx/laurent.hpp"
#include "knotx/stategraph.hpp"
