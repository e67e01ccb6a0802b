/* The public header must compile as C. */
#include "eqlab/eqlab.h"

int main(void) {
  eqlab_instance* inst = 0;
  eqlab_status s = eqlab_instance_load_string("{}", &inst);
  eqlab_instance_free(inst);
  return s == EQLAB_OK ? 0 : 1;
}
