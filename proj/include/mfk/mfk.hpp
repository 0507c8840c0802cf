#pragma once

#include "mfk/amoeba.hpp"
#include "mfk/bergman.hpp"
#include "mfk/bits.hpp"
#include "mfk/corpus.hpp"
#include "mfk/error.hpp"
#include "mfk/geometry.hpp"
#include "mfk/initial.hpp"
#include "mfk/io.hpp"
#include "mfk/job.hpp"
#include "mfk/lattice.hpp"
#include "mfk/linalg.hpp"
#include "mfk/lp.hpp"
#include "mfk/matroid.hpp"
#include "mfk/nested.hpp"
#include "mfk/polytope.hpp"
#include "mfk/rational.hpp"
#include "mfk/reciprocal.hpp"
#include "mfk/simplicial.hpp"
