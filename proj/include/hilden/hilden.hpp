#pragma once

#include "hilden/word.hpp"
#include "hilden/perm.hpp"
#include "hilden/braid.hpp"
#include "hilden/sphere_mcg.hpp"
#include "hilden/presentation.hpp"
#include "hilden/identities.hpp"
#include "hilden/verify.hpp"
#include "hilden/homology.hpp"
