#pragma once

#include "sdke/bitset.hpp"
#include "sdke/budget.hpp"
#include "sdke/decomposition.hpp"
#include "sdke/dot.hpp"
#include "sdke/enumerate.hpp"
#include "sdke/families.hpp"
#include "sdke/graph.hpp"
#include "sdke/independent.hpp"
#include "sdke/matching.hpp"
#include "sdke/parse.hpp"
#include "sdke/sachs.hpp"
#include "sdke/serialize.hpp"
#include "sdke/structures.hpp"
