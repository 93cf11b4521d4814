###############################################################################
#                                                                             #
#    This program is free software: you can redistribute it and/or modify     #
#    it under the terms of the GNU General Public License as published by     #
#    the Free Software Foundation, either version 3 of the License, or        #
#    (at your option) any later version.                                      #
#                                                                             #
#    This program is distributed in the hope that it will be useful,          #
#    but WITHOUT ANY WARRANTY; without even the implied warranty of           #
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the            #
#    GNU General Public License for more details.                             #
#                                                                             #
#    You should have received a copy of the GNU General Public License        #
#    along with this program. If not, see <http://www.gnu.org/licenses/>.     #
#                                                                             #
###############################################################################

import logging
import multiprocessing as mp
import sys
import traceback

from tqdm import tqdm

from mpcoh.exceptions import MPCohException


class _WorkerFailure(object):
    """Carries a formatted traceback from a worker back to the caller."""

    def __init__(self, exc):
        self.exc_type = type(exc).__name__
        self.message = str(exc)
        self.trace = traceback.format_exc()


class Parallel(object):
    """Processes data in parallel.

    Worker processes run the producer on each data item and the main
    process collects what they produce. Results come back in the order of
    `data_items`, whatever order the workers finish in, so the outcome does
    not depend on scheduling.

    With cpus == 1 no processes are started and items are produced in the
    calling process.

    Example:

        def square(x):
            return x * x

        Parallel(cpus=2).run(square, [1, 2, 3, 4, 5])  # [1, 4, 9, 16, 25]
    """

    def __init__(self, cpus=1):
        """Initialization.

        cpus : int
            Number of processes to create.
        """
        self.logger = logging.getLogger('timestamp')
        self.cpus = max(1, cpus)

    @staticmethod
    def _producer(producer_callback, producer_queue, consumer_queue):
        """Process (index, item) pairs until the None sentinel is read.

        Parameters
        ----------
        producer_callback : function
            Function to process data items.
        producer_queue : mp.Queue
            Data items to process.
        consumer_queue : mp.Queue
            Queue for holding processed data items to be consumed.
        """
        while True:
            data_item = producer_queue.get(block=True, timeout=None)
            if data_item is None:
                break
            idx, item = data_item
            try:
                rtn = producer_callback(item)
            except Exception as e:
                rtn = _WorkerFailure(e)
            consumer_queue.put((idx, rtn))

    def run(self, producer, data_items, progress=None):
        """Run the producer over every item.

        Parameters
        ----------
        producer : function
            Function to process data items. Must be picklable when cpus > 1.
        data_items : list
            Data items to process.
        progress : str
            Description shown on a progress bar, or None for no bar.

        Returns
        -------
        list
            The produced data, in the order of `data_items`.

        Raises
        ------
        MPCohException
            If the producer raised on any item.
        """
        data_items = list(data_items)
        bar = tqdm(total=len(data_items), desc=progress, file=sys.stderr,
                   disable=progress is None, leave=False)

        if self.cpus == 1 or len(data_items) <= 1:
            produced = list()
            for idx, item in enumerate(data_items):
                try:
                    produced.append(producer(item))
                except Exception as e:
                    self.logger.debug(traceback.format_exc())
                    raise MPCohException(f'Failed on item {idx}: {type(e).__name__}: {e}') from e
                bar.update()
        else:
            produced = self.__run_workers(producer, data_items, bar)
        bar.close()
        return produced

    def __run_workers(self, producer, data_items, bar):
        producer_queue = mp.Queue()
        for idx, item in enumerate(data_items):
            producer_queue.put((idx, item))
        n_proc = min(self.cpus, len(data_items))
        for _ in range(n_proc):
            producer_queue.put(None)  # signal processes to terminate

        consumer_queue = mp.Queue()
        workers = [mp.Process(target=Parallel._producer,
                              args=(producer, producer_queue, consumer_queue))
                   for _ in range(n_proc)]
        try:
            for p in workers:
                p.start()

            results = dict()
            while len(results) < len(data_items):
                idx, rtn = consumer_queue.get(block=True, timeout=None)
                if isinstance(rtn, _WorkerFailure):
                    self.logger.debug(rtn.trace)
                    raise MPCohException(f'Worker failed on item {idx}: {rtn.exc_type}: {rtn.message}')
                results[idx] = rtn
                bar.update()

            for p in workers:
                p.join()
        except BaseException:
            for p in workers:
                if p.is_alive():
                    p.terminate()
            raise

        return [results[idx] for idx in range(len(data_items))]
