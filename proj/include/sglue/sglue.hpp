#pragma once

#include "sglue/errors.hpp"
#include "sglue/lattice.hpp"
#include "sglue/predicates.hpp"
#include "sglue/report.hpp"
#include "sglue/glue.hpp"
#include "sglue/connect.hpp"
#include "sglue/skeleton.hpp"
#include "sglue/hom.hpp"
#include "sglue/constructions.hpp"
#include "sglue/enumerate.hpp"
#include "sglue/io.hpp"
