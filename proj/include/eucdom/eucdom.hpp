#pragma once

// Everything at once: profiles, single-peaked and single-crossing
// recognition, exact linear feasibility, Euclidean embeddings and the
// minimal non-Euclidean family.

#include "eucdom/error.hpp"
#include "eucdom/rational.hpp"
#include "eucdom/ordering.hpp"
#include "eucdom/profile.hpp"
#include "eucdom/axes.hpp"
#include "eucdom/crossing.hpp"
#include "eucdom/exactlp.hpp"
#include "eucdom/euclid.hpp"
#include "eucdom/family.hpp"
