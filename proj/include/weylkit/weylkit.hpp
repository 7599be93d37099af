#pragma once

#include "weylkit/caps.hpp"
#include "weylkit/folded_gallery.hpp"
#include "weylkit/lambda_tree.hpp"
#include "weylkit/model_space.hpp"
#include "weylkit/path_model.hpp"
#include "weylkit/root_system.hpp"
#include "weylkit/scalars.hpp"
#include "weylkit/svg.hpp"
#include "weylkit/twisted_algebra.hpp"
