#pragma once

#include "bessum/errors.hpp"
#include "bessum/format.hpp"
#include "bessum/rational.hpp"
#include "bessum/real.hpp"
#include "bessum/special.hpp"
