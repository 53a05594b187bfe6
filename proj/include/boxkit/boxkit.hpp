#ifndef BOXKIT_BOXKIT_HPP
#define BOXKIT_BOXKIT_HPP

#include "boxkit/boxicity_oracle.hpp"
#include "boxkit/circulant.hpp"
#include "boxkit/cli.hpp"
#include "boxkit/coloring.hpp"
#include "boxkit/errors.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/io.hpp"
#include "boxkit/realization.hpp"
#include "boxkit/recognition.hpp"
#include "boxkit/split_witness.hpp"

#endif
