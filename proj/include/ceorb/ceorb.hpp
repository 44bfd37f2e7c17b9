// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ceorb/conegeom.hpp"
#include "ceorb/dynkin.hpp"
#include "ceorb/linalg.hpp"
#include "ceorb/nodeset.hpp"
#include "ceorb/orbits.hpp"
#include "ceorb/rational.hpp"
#include "ceorb/repcalc.hpp"
#include "ceorb/rootsys.hpp"
#include "ceorb/tangent.hpp"
