#pragma once

#include "triqubit/bases.hpp"
#include "triqubit/boundstate.hpp"
#include "triqubit/error.hpp"
#include "triqubit/linalg.hpp"
#include "triqubit/productsearch.hpp"
#include "triqubit/qstate.hpp"
#include "triqubit/tangles.hpp"
