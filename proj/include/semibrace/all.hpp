#pragma once

#include "semibrace/catalog.hpp"
#include "semibrace/constructions.hpp"
#include "semibrace/enumeration.hpp"
#include "semibrace/error.hpp"
#include "semibrace/group.hpp"
#include "semibrace/io.hpp"
#include "semibrace/semibrace.hpp"
#include "semibrace/series.hpp"
#include "semibrace/subset.hpp"
#include "semibrace/subsets.hpp"
#include "semibrace/ybe.hpp"
