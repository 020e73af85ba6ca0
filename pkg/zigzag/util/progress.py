from zigzag.util.config import PROGRESSBAR

if PROGRESSBAR:
    try:
        from tqdm.autonotebook import tqdm
    except ImportError:
        tqdm = None
else:
    tqdm = None


def progress(iterable, desc = None, total = None):
    """Wrap ``iterable`` in a progress bar when bars are enabled.

    Bars go to stderr and never to the streamed CLI output.
    """
    if tqdm is None:
        return iterable
    return tqdm(iterable, desc = desc, total = total, leave = False)
