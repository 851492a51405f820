/**
 * Formats a date as an ISO string.
 * @param {Date} date - the date to format
 * @returns {string} the formatted date
 */
function formatDate(date) {
  return date.toISOString();
}
