#pragma once

// Umbrella header for the conecert library: cone-order analysis of linear
// maps (quasi-monotonicity, K-nonnegativity, diffusivity), interior-witness
// stability tests, diffusive Lyapunov and Riccati certificates, and certified
// feasibility search for diagonal-structured Riccati LMIs.

#include "conecert/certificates.hpp"
#include "conecert/cone.hpp"
#include "conecert/counterexample.hpp"
#include "conecert/eig.hpp"
#include "conecert/errors.hpp"
#include "conecert/io.hpp"
#include "conecert/lmi.hpp"
#include "conecert/lp.hpp"
#include "conecert/lyapunov.hpp"
#include "conecert/matrix.hpp"
#include "conecert/psd.hpp"
#include "conecert/qm.hpp"
#include "conecert/solve.hpp"
