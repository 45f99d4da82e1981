# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Export the JSON schema for experiment configurations or analytic profile
declarations. Prints the schema either in JSON or YAML format to standard
output or an optional output file.
"""

import json
import sys
import yaml

from sdlab.experiment.config import CONFIG_SCHEMA
from sdlab.profile.declaration import PROFILE_SCHEMA


SCHEMAS = {'CONFIG': CONFIG_SCHEMA, 'PROFILE': PROFILE_SCHEMA}

USAGE = 'Usage: {[CONFIG | PROFILE]} {[JSON | YAML]} {<output-file>}'


def main(args):
    """Print the selected schema in the selected format."""
    if len(args) > 3:
        print(USAGE)
        sys.exit(-1)
    schema = SCHEMAS.get(args[0].upper() if len(args) > 0 else 'CONFIG')
    format = args[1].upper() if len(args) > 1 else 'JSON'
    output_file = args[2] if len(args) == 3 else None
    if schema is None:
        print('Invalid schema \'{}\''.format(args[0]))
        print(USAGE)
        sys.exit(-1)
    if format == 'JSON':
        if not output_file is None:
            with open(output_file, 'w') as f:
                json.dump(schema, f, indent=4)
        else:
            print(json.dumps(schema, indent=4))
    elif format == 'YAML':
        if not output_file is None:
            with open(output_file, 'w') as f:
                yaml.dump(schema, f)
        else:
            print(yaml.dump(schema))
    else:
        print('Invalid format specification \'{}\''.format(args[1]))
        print(USAGE)
        sys.exit(-1)


if __name__ == '__main__':
    main(sys.argv[1:])
