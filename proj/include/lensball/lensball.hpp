#pragma once

// Exact-arithmetic toolkit for the coprime-pair correspondence between the
// two rational-ball families bounding L(p^2, pq-1): division towers and the
// closed-form pair map, continued-fraction and plumbing-determinant
// identities, first homology of linear plumbings, spin-structure transport,
// and the Gamma / d3 contact-homotopy certificates, plus a sweep harness
// that machine-checks all of it over ranges of coprime pairs.

#include "lensball/integers.hpp"
#include "lensball/euclidean.hpp"
#include "lensball/a_map.hpp"
#include "lensball/contfrac.hpp"
#include "lensball/plumbing.hpp"
#include "lensball/spin.hpp"
#include "lensball/stein.hpp"
#include "lensball/verify.hpp"
#include "lensball/sweep.hpp"
