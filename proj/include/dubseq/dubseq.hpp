#pragma once

#include "dubseq/bench.hpp"
#include "dubseq/bounds.hpp"
#include "dubseq/dubins.hpp"
#include "dubseq/geometry.hpp"
#include "dubseq/instance.hpp"
#include "dubseq/io.hpp"
#include "dubseq/sequence.hpp"
#include "dubseq/svg.hpp"
#include "dubseq/three_point.hpp"
