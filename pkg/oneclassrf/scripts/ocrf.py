"""One-class random forests: train, score and benchmark anomaly detectors"""
from __future__ import print_function, absolute_import, division
import sys

from ..cmdline import App
from ..commands import *
from ..exceptions import OneClassRFError
from ..version import version
# the commands register themselves when they're imported


class OCRFApp(App):
    pass


def _one_line(e):
    return ' '.join(str(e).split())


def main(argv=None):
    try:
        app = OCRFApp(name='ocrf', description=__doc__, argv=argv)
        app.start()
    except (OneClassRFError, ValueError, EnvironmentError) as e:
        print('ocrf: error: %s: %s' % (e.__class__.__name__, _one_line(e)),
              file=sys.stderr)
        sys.exit(1)
    except Exception:
        message = """\
An unexpected error has occurred with oneclassrf (version %s), please
consider reporting the following traceback to the oneclassrf issue tracker.
"""
        print(message % version, file=sys.stderr)
        raise  # as if we did not catch it


if __name__ == '__main__':
    main()
