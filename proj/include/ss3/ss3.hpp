#pragma once

#include "ss3/classify.hpp"
#include "ss3/count.hpp"
#include "ss3/curve.hpp"
#include "ss3/errors.hpp"
#include "ss3/field.hpp"
#include "ss3/serialize.hpp"
#include "ss3/vectors.hpp"
#include "ss3/verify.hpp"
