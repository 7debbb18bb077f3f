#pragma once

#include "media/blackbox.hpp"
#include "media/content.hpp"
#include "media/generators.hpp"
#include "media/io.hpp"
#include "media/medium.hpp"
#include "media/oracles.hpp"
#include "media/orientation.hpp"
#include "media/orientations.hpp"
#include "media/paths.hpp"
#include "media/set_family.hpp"
#include "media/token_table.hpp"
#include "media/two_sat.hpp"
#include "media/types.hpp"
#include "media/verify.hpp"
