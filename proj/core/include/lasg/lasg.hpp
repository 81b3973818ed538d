#pragma once

#include "lasg/affine.hpp"
#include "lasg/cayley_io.hpp"
#include "lasg/elem_set.hpp"
#include "lasg/enumerate.hpp"
#include "lasg/errors.hpp"
#include "lasg/ideals.hpp"
#include "lasg/laws.hpp"
#include "lasg/magma.hpp"
#include "lasg/report_json.hpp"
#include "lasg/theorems.hpp"
