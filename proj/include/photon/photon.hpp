#pragma once

// Umbrella header for the photon model library.

#include "photon/evolve.hpp"
#include "photon/field.hpp"
#include "photon/fourier.hpp"
#include "photon/grid.hpp"
#include "photon/lorentz.hpp"
#include "photon/maxwell.hpp"
#include "photon/quadrature.hpp"
#include "photon/rotation.hpp"
#include "photon/serialize.hpp"
#include "photon/spin.hpp"
#include "photon/tensor.hpp"
#include "photon/toy_models.hpp"
#include "photon/vec.hpp"
