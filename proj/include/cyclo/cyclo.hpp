#pragma once

#include "arith.hpp"
#include "field.hpp"
#include "forms.hpp"
#include "wreath.hpp"
#include "cycle_index.hpp"
#include "conjugacy.hpp"
#include "oracle.hpp"
#include "io.hpp"
