using Microsoft.AspNetCore.Mvc;

namespace Demo.Web
{
    [ApiController]
    public class UsersController : ControllerBase
    {
        /// <summary>
        /// Возвращает пользователя по идентификатору.
        /// </summary>
        /// <param name="id">Идентификатор пользователя.</param>
        /// <returns>Найденный пользователь.</returns>
        [HttpGet]
        [Route("users/{id}")]
        public IActionResult Get(int id)
        {
            return Ok(id);
        }
    }
}
