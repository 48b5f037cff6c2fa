#pragma once

#include "weyl/braiding.hpp"
#include "weyl/builtin_catalog.hpp"
#include "weyl/catalog.hpp"
#include "weyl/errors.hpp"
#include "weyl/groupoid.hpp"
#include "weyl/int_matrix.hpp"
#include "weyl/io.hpp"
#include "weyl/parse.hpp"
#include "weyl/scalar.hpp"
