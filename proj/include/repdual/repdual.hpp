#pragma once

#include "builtin_groups.hpp"
#include "chartable.hpp"
#include "chartable_cache.hpp"
#include "codes.hpp"
#include "cyclotomic.hpp"
#include "duality.hpp"
#include "group.hpp"
#include "identities.hpp"
#include "input.hpp"
#include "json_io.hpp"
#include "polynomial.hpp"
