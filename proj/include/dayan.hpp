#pragma once

#include "dayan/core_arith.hpp"
#include "dayan/dayan.hpp"
#include "dayan/ext_euclid.hpp"
#include "dayan/contfrac.hpp"
#include "dayan/crt.hpp"
#include "dayan/wiener.hpp"
