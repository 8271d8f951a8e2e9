#pragma once

#include "tqft2d/error.hpp"
#include "tqft2d/formats.hpp"
#include "tqft2d/functor.hpp"
#include "tqft2d/network.hpp"
#include "tqft2d/orientation.hpp"
#include "tqft2d/scalar.hpp"
#include "tqft2d/surface.hpp"
#include "tqft2d/tensor.hpp"
#include "tqft2d/tqft_data.hpp"
#include "tqft2d/verify.hpp"
