#pragma once

#include "vdc/bounds.hpp"
#include "vdc/constants.hpp"
#include "vdc/dd.hpp"
#include "vdc/error.hpp"
#include "vdc/numkernel.hpp"
#include "vdc/phase.hpp"
#include "vdc/selection.hpp"
#include "vdc/verify.hpp"
#include "vdc/window.hpp"
#include "vdc/zeta.hpp"
