#pragma once

#include "wbirkhoff/averaging.hpp"
#include "wbirkhoff/diagnostics.hpp"
#include "wbirkhoff/flows.hpp"
#include "wbirkhoff/fourier.hpp"
#include "wbirkhoff/io.hpp"
#include "wbirkhoff/lyapunov.hpp"
#include "wbirkhoff/rotation.hpp"
#include "wbirkhoff/systems.hpp"
#include "wbirkhoff/weights.hpp"
