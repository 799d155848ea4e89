// Umbrella header.
#pragma once

#include "lieflag/acceptance.hpp"
#include "lieflag/classify.hpp"
#include "lieflag/compare.hpp"
#include "lieflag/core.hpp"
#include "lieflag/free_lie.hpp"
#include "lieflag/graded_algebra.hpp"
#include "lieflag/json_io.hpp"
#include "lieflag/linalg.hpp"
#include "lieflag/models.hpp"
#include "lieflag/nilpotent_quotient.hpp"
#include "lieflag/parabolic.hpp"
#include "lieflag/prolongation.hpp"
#include "lieflag/root_system.hpp"
#include "lieflag/serre.hpp"
#include "lieflag/splitting.hpp"
