#pragma once

#include "nwfs/common.hpp"
#include "nwfs/flowshop.hpp"
#include "nwfs/graph.hpp"
#include "nwfs/solvers.hpp"
#include "nwfs/transforms.hpp"
#include "nwfs/embeddings.hpp"
#include "nwfs/generators.hpp"
#include "nwfs/io.hpp"
