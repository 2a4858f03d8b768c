// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Umbrella header.

#include "lrotor/catalog.hpp"
#include "lrotor/errors.hpp"
#include "lrotor/io.hpp"
#include "lrotor/lorentz.hpp"
#include "lrotor/momentum.hpp"
#include "lrotor/ode.hpp"
#include "lrotor/quadrature.hpp"
#include "lrotor/quadrics.hpp"
#include "lrotor/surface.hpp"
#include "lrotor/types.hpp"
#include "lrotor/verify.hpp"
#include "lrotor/weingarten.hpp"
