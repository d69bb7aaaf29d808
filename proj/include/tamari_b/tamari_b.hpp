#pragma once

#include "alignment.hpp"
#include "composition.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "export.hpp"
#include "lattice.hpp"
#include "options.hpp"
#include "parabolic.hpp"
#include "projection.hpp"
#include "signed_perm.hpp"
#include "tamari.hpp"
