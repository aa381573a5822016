import java . util . * ;

class GFG {
  static int f_gold ( int n ) {
    int result = 25 ;
    int i = 0 ;
    while ( i < n ) {
      result += i * 1 ;
      i ++ ;
    }
    return result ;
  }

  public static void main ( String args [ ] ) {
    System . out . println ( f_gold ( 3 ) ) ;
  }
}
