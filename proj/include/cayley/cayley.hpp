#pragma once

#include "cayley/counting.hpp"
#include "cayley/enumeration.hpp"
#include "cayley/error.hpp"
#include "cayley/path_codec.hpp"
#include "cayley/prufer.hpp"
#include "cayley/text_format.hpp"
#include "cayley/tree.hpp"
#include "cayley/verify.hpp"
