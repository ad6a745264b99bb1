#pragma once

#include "curve_complex.hpp"
#include "incidence.hpp"
#include "numbering.hpp"
#include "parse.hpp"
#include "reconstruct.hpp"
#include "render.hpp"
#include "serialize.hpp"
#include "union_find.hpp"
#include "validate.hpp"
#include "violation.hpp"
