# ==============================================================================
#                                L I C E N S E
# ==============================================================================
#
# Copyright (c) 2020 Adrian Bittner
#
# This software is provided as is without any warranty whatsoever. Permission to
# use, for non-commercial purposes is granted. Permission to modify for personal
# or internal use is granted, provided this copyright and disclaimer are included
# in all copies of the software. Redistribution of the code, modified or not, is
# not allowed. All other rights are reserved.
#
# ==============================================================================
#
# Slightly edited to allow for Jupyter Notebook use and double line replacement.
# 29-06-2020 Fabian Gunnink
#
# ==============================================================================
#
# Status printer adapted from the terminal progress helpers of Adrian Bittner
# (2020). Messages go to stderr so that stdout only carries command output.
#
# ==============================================================================

import sys
from datetime import datetime

import logging
logger = logging.getLogger(__name__)

# Set by the command line front end (--quiet); messages are still logged
quiet = False

_tags = {
    "running": ("\033[0;37m", "RUNNING "),
    "done":    ("\033[0;32m", "DONE    "),
    "warning": ("\033[0;33m", "WARNING "),
    "failed":  ("\033[0;31m", "FAILED  "),
}

def _now():
    return datetime.now().isoformat(sep=' ', timespec='milliseconds').split(" ")[1]

def _write(kind, outputlabel, overwrite=False, progressbar=False):
    if quiet:
        return
    color, tag = _tags[kind]
    if progressbar:
        sys.stderr.write("\033[K")
    if overwrite:
        sys.stderr.write("\033[F"); sys.stderr.write("\033[K")
    sys.stderr.write("\r{} [ ".format(_now()) + color + tag + "\033[0;39m" + "] " + outputlabel + "\n")
    sys.stderr.flush()

def progressBar(iteration, total, prefix='', suffix='', decimals=2, barLength=60, log=True):
    """
    Redraw a one-line progress bar below the current RUNNING label, e.g. while
    a plugin walks the graphs of a verify run.

    Parameters:
        iteration - items finished so far (int)
        total     - items in the run; 0 is drawn as an empty bar (int)
        prefix    - label shown above the bar, also logged at DEBUG (str)
        suffix    - text after the percentage (str)
        decimals  - digits of the percentage (int)
        barLength - bar width in characters (int)
        log       - whether to log the prefix (bool)
    """
    if log: logging.debug(prefix, stacklevel=2)
    if quiet:
        return
    total = max(total, 1)
    percents     = round(100.00 * (iteration / float(total)), decimals)
    filledLength = int(round(barLength * iteration / float(total)))
    bar          = '\033[42m' + ' '*filledLength + '\033[49m' + ' '*(barLength - filledLength)
    if iteration != 0:
        sys.stderr.write("\033[F")
    sys.stderr.write(("\r{} [ ".format(_now()) + '\033[0;37m' + "RUNNING " + '\033[0;39m' + "] {}\n |{}| {:.2f}{} {}\r")
                 .format(prefix, bar, percents, '%', suffix))
    sys.stderr.flush()

def module(outputlabel, log=True):
    """ Print a section header, e.g. the plugin a verify run enters next. """
    if log: logging.info(outputlabel, stacklevel=2)
    if not quiet:
        sys.stderr.write("\033[0;37m" + outputlabel + "\033[0;39m\n")
        sys.stderr.flush()

def running(outputlabel, log=True):
    """ Print a new message with the tag "Running". """
    if log: logging.info(outputlabel, stacklevel=2)
    _write("running", outputlabel)

def updateDone(outputlabel, progressbar=False, log=True):
    """
    Replace the last RUNNING line by a DONE line.

    Parameters:
        outputlabel - text of the new line (str)
        progressbar - the last line was a progress bar, clear it too (bool)
    """
    if log: logging.info(outputlabel, stacklevel=2)
    _write("done", outputlabel, overwrite=True, progressbar=progressbar)

def done(outputlabel, log=True):
    """ Print a new message with the tag "Done". """
    if log: logging.info(outputlabel, stacklevel=2)
    _write("done", outputlabel)

def updateWarning(outputlabel, progressbar=False, log=True):
    """ Overwrite the previous message with the tag "Warning". """
    if log: logging.warning(outputlabel, stacklevel=2)
    _write("warning", outputlabel, overwrite=True, progressbar=progressbar)

def warning(outputlabel, log=True):
    """ Print a new message with the tag "Warning". """
    if log: logging.warning(outputlabel, stacklevel=2)
    _write("warning", outputlabel)

def updateFailed(outputlabel, progressbar=False, log=True):
    """ Overwrite the previous message with the tag "Failed". """
    if log: logging.error(outputlabel, stacklevel=2)
    _write("failed", outputlabel, overwrite=True, progressbar=progressbar)

def failed(outputlabel, log=True):
    """ Print a new message with the tag "Failed". """
    if log: logging.error(outputlabel, stacklevel=2)
    _write("failed", outputlabel)

def newline():
    if not quiet:
        sys.stderr.write("\n")
