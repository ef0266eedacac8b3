#pragma once

#include "sombor/error.hpp"
#include "sombor/tree.hpp"
#include "sombor/canonical.hpp"
#include "sombor/serialize.hpp"
#include "sombor/enumerate.hpp"
#include "sombor/scalar.hpp"
#include "sombor/indices.hpp"
#include "sombor/extremal.hpp"
#include "sombor/verify.hpp"
#include "sombor/report.hpp"
