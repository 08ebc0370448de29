#pragma once

#include "core.hpp"
#include "gamma.hpp"
#include "bilateral.hpp"
#include "qseries.hpp"
#include "ramanujan.hpp"
#include "qintegrals.hpp"
#include "record.hpp"
#include "io.hpp"
#include "verify.hpp"
