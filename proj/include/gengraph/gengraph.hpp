#pragma once

#include "gengraph/cyclic_group.hpp"
#include "gengraph/errors.hpp"
#include "gengraph/generator_graph.hpp"
#include "gengraph/metric_dim.hpp"
#include "gengraph/parallel.hpp"
#include "gengraph/report_io.hpp"
#include "gengraph/simple_graph.hpp"
#include "gengraph/topo_indices.hpp"
#include "gengraph/verification.hpp"
