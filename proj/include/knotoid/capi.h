#ifndef KNOTOID_CAPI_H
#define KNOTOID_CAPI_H
#endif
