#pragma once

// Umbrella header for the library (the CLI layer in dynkin/cli.hpp is separate
// because it pulls in CLI11).

#include "dynkin/canonical.hpp"
#include "dynkin/cartan_series.hpp"
#include "dynkin/catalog.hpp"
#include "dynkin/classify.hpp"
#include "dynkin/determinant.hpp"
#include "dynkin/enumerate.hpp"
#include "dynkin/extension.hpp"
#include "dynkin/gcm.hpp"
#include "dynkin/io.hpp"
#include "dynkin/symmetrize.hpp"
#include "dynkin/verify.hpp"
#include "dynkin/weyl.hpp"
