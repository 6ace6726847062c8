#pragma once

#include "wg/cyclo.hpp"
#include "wg/partitions.hpp"
#include "wg/groups.hpp"
#include "wg/group_io.hpp"
#include "wg/symfunc.hpp"
#include "wg/wreath.hpp"
#include "wg/spherical.hpp"
