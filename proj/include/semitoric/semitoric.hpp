#pragma once

#include "semitoric/errors.hpp"
#include "semitoric/geometry.hpp"
#include "semitoric/polygon.hpp"
#include "semitoric/vertex_analysis.hpp"
#include "semitoric/validate.hpp"
#include "semitoric/cut_calculus.hpp"
#include "semitoric/karshon_graph.hpp"
#include "semitoric/system_analysis.hpp"
#include "semitoric/corner_chop.hpp"
#include "semitoric/io.hpp"
#include "semitoric/corpus.hpp"
