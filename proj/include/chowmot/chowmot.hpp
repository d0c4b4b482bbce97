#pragma once

#include "chowmot/char_classes.hpp"
#include "chowmot/constructions.hpp"
#include "chowmot/correspondence.hpp"
#include "chowmot/cycle.hpp"
#include "chowmot/errors.hpp"
#include "chowmot/json_io.hpp"
#include "chowmot/k_shadow.hpp"
#include "chowmot/motive.hpp"
#include "chowmot/orbit.hpp"
#include "chowmot/random.hpp"
#include "chowmot/rational.hpp"
#include "chowmot/series.hpp"
#include "chowmot/variety.hpp"
#include "chowmot/verify.hpp"
