#include "knotoid/capi.h"
namespace knotoid_capi_stub {}
