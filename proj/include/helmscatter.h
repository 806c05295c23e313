#ifndef HELMSCATTER_H
#define HELMSCATTER_H

/* C interface to the helmscatter solver library. All entry points return
 * an hs_status; on failure hs_last_error() describes the problem. Handles
 * are opaque and must be released with the matching destroy call. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    HS_OK = 0,
    HS_ERR_BADARG = 1,  /* null pointer or malformed argument */
    HS_ERR_CONFIG = 2,  /* invalid configuration or unknown identifier */
    HS_ERR_DOMAIN = 3,  /* input outside the mathematical domain */
    HS_ERR_NUMERIC = 4, /* numerical failure */
    HS_ERR_IO = 5       /* file system failure */
} hs_status;

const char* hs_version(void);

/* message for the most recent failure on this thread */
const char* hs_last_error(void);

typedef struct hs_curve hs_curve;
typedef struct hs_operator hs_operator;

/* smooth shapes: circle, kite, cavity; n grid points */
hs_status hs_curve_create(const char* shape, int n, hs_curve** out);

/* polygonal shapes with graded meshes: square, lshape; grading power p */
hs_status hs_curve_create_graded(const char* shape, int p, int n,
                                 hs_curve** out);

int hs_curve_size(const hs_curve* c);
hs_status hs_curve_export_csv(const hs_curve* c, const char* path);
void hs_curve_destroy(hs_curve* c);

/* assemble a boundary integral system for a formulation id such as
 * "dirichlet.cfie" or "neumann.cfier.rn" */
hs_status hs_operator_assemble(const char* formulation_id, const hs_curve* c,
                               double lambda, double mu, double omega,
                               hs_operator** out);

/* system dimension (2 * grid size) */
int hs_operator_dim(const hs_operator* op);

/* y = A x on split re/im arrays of length hs_operator_dim() */
hs_status hs_operator_apply(const hs_operator* op, const double* x_re,
                            const double* x_im, double* y_re, double* y_im);

/* binary dump of the dense system matrix */
hs_status hs_operator_dump(const hs_operator* op, const char* path);
void hs_operator_destroy(hs_operator* op);

/* run one CLI subcommand (solve, bench-iters, spectrum, convergence,
 * verify-psdo) from a JSON config file, writing artifacts into out_dir;
 * threads <= 0 keeps the current setting; nonzero large extends the
 * bench-iters frequency sweep with the expensive high frequencies */
hs_status hs_run(const char* subcommand, const char* config_path,
                 const char* out_dir, int threads, int large);

#ifdef __cplusplus
}
#endif

#endif /* HELMSCATTER_H */
