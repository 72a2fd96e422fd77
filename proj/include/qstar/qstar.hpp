#pragma once

#include "qstar/digit_seq.hpp"
#include "qstar/expansion.hpp"
#include "qstar/function.hpp"
#include "qstar/json_io.hpp"
#include "qstar/rational.hpp"
#include "qstar/sets.hpp"
#include "qstar/system.hpp"
